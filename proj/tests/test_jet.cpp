#include "doctest.h"
#include "lumps/jet.hpp"

using namespace lumps;

namespace {
double d(real_t x) { return (double)x; }
} // namespace

TEST_CASE("jet arithmetic reproduces closed-form derivatives") {
    // f(x) = x^3 / (1 + x^2)
    double x0 = 0.7;
    jet6 x = jet6::variable(x0);
    jet6 f = pow(x, 3) / (1.0 + x * x);
    double q = 1.0 + x0 * x0;
    CHECK(d(f.value()) == doctest::Approx(x0 * x0 * x0 / q).epsilon(1e-14));
    double fp = (3 * x0 * x0 * q - x0 * x0 * x0 * 2 * x0) / (q * q);
    CHECK(d(f.deriv(1)) == doctest::Approx(fp).epsilon(1e-14));
}

TEST_CASE("jet transcendental functions") {
    double x0 = 1.3;
    jet6 x = jet6::variable(x0);
    jet6 f = log(sqrt(1.0 + x * x));
    // f = log(1+x^2)/2, f' = x/(1+x^2), f'' = (1-x^2)/(1+x^2)^2
    double q = 1.0 + x0 * x0;
    CHECK(d(f.value()) == doctest::Approx(0.5 * std::log(q)).epsilon(1e-14));
    CHECK(d(f.deriv(1)) == doctest::Approx(x0 / q).epsilon(1e-14));
    CHECK(d(f.deriv(2)) == doctest::Approx((1 - x0 * x0) / (q * q)).epsilon(1e-14));

    jet6 g = exp(x * 0.5);
    for (int k = 0; k <= 4; ++k)
        CHECK(d(g.deriv(k)) ==
              doctest::Approx(std::pow(0.5, k) * std::exp(0.5 * x0)).epsilon(1e-14));
}

TEST_CASE("jet derivative() shifts coefficients") {
    jet6 x = jet6::variable(2.0);
    jet6 f = pow(x, 4);
    jet6 fp = f.derivative();
    CHECK(d(fp.value()) == doctest::Approx(4 * 8.0));
    CHECK(d(fp.deriv(1)) == doctest::Approx(12 * 4.0));
}

TEST_CASE("div_by_variable: plain quotient away from zero, shift at zero") {
    jet6 x = jet6::variable(0.5);
    jet6 f = x * x; // f/x = x
    jet6 q = div_by_variable(f, x);
    CHECK(d(q.value()) == doctest::Approx(0.5).epsilon(1e-14));

    jet6 x0 = jet6::variable(0.0);
    jet6 g = 3.0 * x0 * x0; // g/x = 3x
    jet6 q0 = div_by_variable(g, x0);
    CHECK(d(q0.value()) == doctest::Approx(0.0));
    CHECK(d(q0.deriv(1)) == doctest::Approx(3.0));

    jet6 bad = 1.0 + x0;
    CHECK_THROWS_AS((void)div_by_variable(bad, x0), invalid_input);
}

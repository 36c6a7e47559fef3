#include <random>

#include "doctest.h"
#include "lumps/errors.hpp"
#include "lumps/moebius.hpp"
#include "lumps/profiles.hpp"
#include "lumps/rational_map.hpp"
#include "test_util.hpp"

using namespace lumps;

TEST_CASE("evaluate: identity, axis dilation, pole convention") {
    RationalMap id = RationalMap::identity();
    auto v = id(ExtendedComplex(cplx(0.0, 1.0)));
    CHECK(std::abs(v.v - cplx(0.0, 1.0)) < 1e-15);

    // mu = 4 corresponds to lambda = 3/4
    CHECK(mu_of_lambda(0.75) == doctest::Approx(4.0).epsilon(1e-15));
    RationalMap w4 = RationalMap::dilation(4.0);
    CHECK(w4(ExtendedComplex(cplx(1.0))).v.real() == doctest::Approx(4.0));

    RationalMap inv(1, {cplx(1.0), cplx(0.0)}, {cplx(0.0), cplx(1.0)}); // 1/z
    CHECK(inv(ExtendedComplex(cplx(0.0))).is_inf());
    CHECK(inv(ExtendedComplex::infinity()).v == cplx(0.0));

    // degree-aware value at infinity
    CHECK(w4(ExtendedComplex::infinity()).is_inf());
    CHECK(RationalMap::power(2)(ExtendedComplex::infinity()).is_inf());
}

TEST_CASE("is_valid_degree") {
    CHECK(is_valid_degree(RationalMap::identity()));
    // common root at z = 1 declared as degree 2
    RationalMap bad(2, {cplx(-1.0), cplx(0.0), cplx(1.0)}, {cplx(-1.0), cplx(1.0), cplx(0.0)});
    CHECK_FALSE(is_valid_degree(bad));
    // built from well-separated roots: numerator roots {1,2,3}, denominator {-1,-2,-3}
    RationalMap good(3, {cplx(-6.0), cplx(11.0), cplx(-6.0), cplx(1.0)},
                     {cplx(6.0), cplx(11.0), cplx(6.0), cplx(1.0)});
    CHECK(is_valid_degree(good));
    CHECK_THROWS_AS(
        (void)RationalMap(1, {cplx(0.0), cplx(0.0)}, {cplx(0.0), cplx(0.0)}),
        invalid_input);
}

TEST_CASE("projective scale invariance of evaluation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
        RationalMap m = testutil::random_valid_map(2, rng);
        RationalMap ms = m.scaled(cplx(0.37, -1.21));
        CHECK(map_distance(m, ms) < 1e-13);
    }
}

TEST_CASE("antipodal involution") {
    // degree-1 unitary class is fixed
    Matrix2c U = su2_exp(Eigen::Vector3d(0.3, -0.5, 0.8), 1.1);
    RationalMap um = moebius_map(U);
    CHECK(map_distance(um, antipodal_involution(um)) < 1e-12);

    // z -> z^n for odd n is fixed (direct substitution on a grid)
    for (int n : {1, 3, 5})
        CHECK(map_distance(RationalMap::power(n), antipodal_involution(RationalMap::power(n))) <
              1e-12);

    // involution property on random maps
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + (int)(rng() % 3);
        RationalMap m = testutil::random_valid_map(n, rng);
        CHECK(map_distance(m, antipodal_involution(antipodal_involution(m))) < 1e-12);
    }
}

TEST_CASE("n=1 fixed set of the involution is exactly the unitary classes") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        RationalMap m = testutil::random_valid_map(1, rng);
        Matrix2c M = moebius_matrix(m);
        Matrix2c MM = M * M.adjoint();
        double dev_unitary =
            (MM / (0.5 * MM.trace().real()) - Matrix2c::Identity()).cwiseAbs().maxCoeff();
        double fixed_resid = map_distance(m, antipodal_involution(m), 60);
        if (dev_unitary < 1e-12) {
            CHECK(fixed_resid < 1e-10);
        } else if (fixed_resid < 1e-10) {
            CHECK(dev_unitary < 1e-10);
        }
    }
    // and an honest positive instance
    Matrix2c U = su2_exp(Eigen::Vector3d(0, 1, 0), 0.7);
    CHECK(map_distance(moebius_map(U), antipodal_involution(moebius_map(U))) < 1e-10);
}

TEST_CASE("projective-plane equivariance residual") {
    CHECK(rp2_equivariance_residual(RationalMap::power(3)) < 1e-12);
    CHECK(rp2_equivariance_residual(RationalMap::power(2)) > 0.5);
    Matrix2c U = su2_exp(Eigen::Vector3d(1, 2, 2).normalized(), 0.9);
    CHECK(rp2_equivariance_residual(moebius_map(U)) < 1e-12);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(3);
    RationalMap m = testutil::random_valid_map(2, rng);
    RationalMap back = RationalMap::from_json(m.to_json());
    CHECK(map_distance(m, back) < 1e-14);
    CHECK(back.degree() == 2);
}

#include <random>

#include "doctest.h"
#include "lumps/invariant_metrics.hpp"
#include "lumps/profiles.hpp"

using namespace lumps;

TEST_CASE("coefficient functions from the generator") {
    L2Profile l2;
    for (double lam : {0.0, 0.3, 1.0, 4.0}) {
        InvariantCoefficients c = coefficients_from_A(l2, lam);
        CHECK(c.A5 == c.A1); // exact by construction
        CHECK(c.B == doctest::Approx(l2.B_value(lam)).epsilon(1e-12));
    }
    InvariantCoefficients c0 = coefficients_from_A(l2, 0.0);
    CHECK(c0.A3 == doctest::Approx(c0.A1 / 4.0).epsilon(1e-14));
    // limit values of the quotient coefficients at the origin
    double App0 = (double)l2.A(0.0).deriv(2);
    CHECK(c0.A2 == doctest::Approx(c0.A1 + App0).epsilon(1e-12));
    CHECK(c0.A4 == doctest::Approx(App0 / 4.0).epsilon(1e-12));
}

TEST_CASE("frame geometry structure at axis points") {
    L2Profile l2;
    for (double lam : {0.0, 1.0, 5.0}) {
        FrameGeometry fg = frame_geometry(l2, lam);
        InvariantCoefficients c = coefficients_from_A(l2, lam);
        CHECK(fg.gram(5, 5) == doctest::Approx(c.A3 + lam * lam * c.A4).epsilon(1e-13));
        CHECK(fg.gram(2, 5) == doctest::Approx(0.0));
        CHECK((fg.J * fg.J + Matrix6::Identity()).cwiseAbs().maxCoeff() < 1e-13);
        // omega antisymmetric
        CHECK((fg.omega + fg.omega.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        // Hermiticity of the Gram with respect to J
        std::mt19937_64 rng(97);
        std::normal_distribution<double> g;
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::Matrix<double, 6, 1> x, y;
            for (int k = 0; k < 6; ++k) {
                x[k] = g(rng);
                y[k] = g(rng);
            }
            double lhs = (fg.J * x).dot(fg.gram * (fg.J * y));
            double rhs = x.dot(fg.gram * y);
            CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
        }
        // positive definite
        Eigen::SelfAdjointEigenSolver<Matrix6> es(fg.gram);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("kahler form coefficients and closure") {
    for (const char* name : {"l2", "fs"}) {
        auto p = make_profile(name);
        auto grid = log_grid(0.1, 10.0, 25);
        CHECK(verify_hermiticity(*p, grid) < 1e-10);
        CHECK(verify_closure(*p, grid) < 1e-8);
        for (double lam : {0.0, 0.5, 2.0}) {
            FrameGeometry fg = frame_geometry(*p, lam);
            CHECK(fg.Ahat1 == doctest::Approx(fg.Ahat3).epsilon(1e-13));
            CHECK(fg.Ahat4 == 0.0); // A5 = A1 exactly
            // omega matrix agrees with the general-shape expression
            Matrix6 Om = invariant_omega(*p, Eigen::Vector3d(0, 0, lam));
            CHECK((Om - fg.omega).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("hermiticity check detects an injected defect") {
    L2Profile l2;
    auto grid = log_grid(0.5, 2.0, 5);
    auto perturbed = [&](double l) {
        InvariantCoefficients c = coefficients_from_A(l2, l);
        c.A3 *= 1.0 + 1e-3;
        return c;
    };
    double res = verify_hermiticity(perturbed, grid);
    double scale = coefficients_from_A(l2, 0.5).A3;
    CHECK(res > 1e-4 * scale);
    CHECK(res < 1e-2 * scale);
}

TEST_CASE("character integrals") {
    auto a = character_integrals();
    CHECK(std::abs(a[0] - 7.0) < 1e-10);
    CHECK(std::abs(a[1] - 5.0) < 1e-10);
    CHECK(std::abs(a[2] - 3.0) < 1e-10);
    CHECK(std::abs(a[3] - 1.0) < 1e-10);
    // trivial character against both normalized measures
    GaussLegendre g = gauss_legendre(128, 0.0, 2.0 * M_PI);
    double circle = 0.0, cls = 0.0;
    for (int i = 0; i < 128; ++i) {
        circle += g.w[i] / (2.0 * M_PI);
        double s = std::sin(g.x[i] / 2);
        cls += g.w[i] / M_PI * s * s;
    }
    CHECK(std::abs(circle - 1.0) < 1e-12);
    CHECK(std::abs(cls - 1.0) < 1e-12);
}

TEST_CASE("positivity constraints") {
    auto grid = log_grid(1e-2, 100.0, 500);
    CHECK(positivity_check(L2Profile(), grid).ok);
    CHECK(positivity_check(FSProfile(), grid).ok);

    // a profile decaying like lambda^-3 violates the decay bound
    struct Fast : CoefficientProfile {
        std::string name() const override { return "fast-decay"; }
        jet6 A(double lambda) const override {
            jet6 t = jet6::variable((real_t)lambda);
            return 1.0 / pow(sqrt(1.0 + t * t), 3);
        }
    } fast;
    PositivityReport rep = positivity_check(fast, grid);
    CHECK_FALSE(rep.ok);
}

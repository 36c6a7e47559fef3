#include <random>

#include "doctest.h"
#include "lumps/errors.hpp"
#include "lumps/invariant_metrics.hpp"
#include "lumps/l2_metric.hpp"
#include "lumps/profiles.hpp"
#include "test_util.hpp"

using namespace lumps;

namespace {
const SphereQuadrature& quad64() {
    static SphereQuadrature q(64);
    return q;
}
} // namespace

TEST_CASE("energy of holomorphic maps is quantized") {
    for (int n = 1; n <= 4; ++n)
        CHECK(std::abs(energy(RationalMap::power(n), quad64()) - 2.0 * M_PI * n) < 1e-7);
    // degree-1 energy is independent of the dilation factor
    for (double mu : {1.0, 4.0, 25.0})
        CHECK(std::abs(energy(RationalMap::dilation(mu), quad64()) - 2.0 * M_PI) < 1e-8);
}

TEST_CASE("metric matrix: Hermitian by construction, positive definite") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2}) {
        RationalMap m = testutil::random_valid_map(n, rng);
        MetricMatrix g = l2_metric_matrix(m, quad64());
        CHECK(g.hermiticity_residual() == 0.0);
        CHECK(g.smallest_eigenvalue() > 0.0);
    }
}

TEST_CASE("metric matrix rejects degenerate bases and bad charts") {
    // common-root map: degenerate
    RationalMap bad(2, {cplx(-1.0), cplx(0.0), cplx(1.0)}, {cplx(-1.0), cplx(1.0), cplx(1e-13)});
    CHECK_THROWS((void)l2_metric_matrix(bad, quad64()));
    // healthy map whose denominator leading coefficient vanishes: chart error
    CHECK_THROWS_AS((void)l2_metric_matrix(RationalMap::dilation(2.0), quad64()),
                    invalid_input);
}

TEST_CASE("quadrature metric matches the closed-form generator on the axis") {
    L2Profile l2;
    for (double lam : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        Matrix2c M = w_lambda_matrix(lam);
        auto vars = frame_variations_at_w_lambda(lam);
        double got = metric_norm2_deg1(M, vars[0].Mdot, quad64());
        double expect = l2.A_value(lam);
        CHECK(std::abs(got / expect - 1.0) < 1e-6);
    }
    // lambda = 0 series value is 4 pi / 3
    CHECK(std::abs(metric_norm2_deg1(w_lambda_matrix(0.0),
                                     frame_variations_at_w_lambda(0.0)[0].Mdot, quad64()) -
                   4.0 * M_PI / 3.0) < 1e-6);
}

TEST_CASE("kaehler symmetry residual is small and scales like step^2") {
    std::mt19937_64 rng(19);
    RationalMap m1 = testutil::random_valid_map(1, rng);
    CHECK(kaehler_symmetry_residual(m1, 1e-4, quad64()) < 1e-5);
    RationalMap m2 = testutil::random_valid_map(2, rng);
    CHECK(kaehler_symmetry_residual(m2, 1e-4, SphereQuadrature(48)) < 1e-5);

    double r2 = kaehler_symmetry_residual(m1, 1e-2, quad64());
    double r3 = kaehler_symmetry_residual(m1, 1e-3, quad64());
    // central differences: residual ~ step^2 (allow slack for the noise floor)
    CHECK(r3 < r2 * 0.05);
}

TEST_CASE("frame tangents in the complex chart") {
    auto t0 = frame_tangents_at_w_lambda(0.0);
    CHECK(std::abs(t0[0][0] - cplx(1.0)) < 1e-14); // db1/dlam1 = 1
    CHECK(std::abs(t0[0][1] - cplx(1.0)) < 1e-14); // db2/dlam1 = 1
    CHECK(std::abs(t0[0][2]) < 1e-14);             // db3/dlam1 = 0

    for (double lam : {0.0, 0.7, 3.0}) {
        auto t = frame_tangents_at_w_lambda(lam);
        double Lam = std::sqrt(1.0 + lam * lam);
        // multiplication by i realizes J: J d/dlam3 = (2/Lambda) theta_3
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(cplx(0, 1) * t[2][k] - 2.0 / Lam * t[5][k]) < 1e-13);
        // J d/dlam1 = (2/Lambda)(theta_1 - (lam/2) d/dlam2)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(cplx(0, 1) * t[0][k] -
                           2.0 / Lam * (t[3][k] - 0.5 * lam * t[1][k])) < 1e-13);
    }
}

TEST_CASE("frame tangents are real-linearly independent") {
    for (double lam : {0.0, 1.0, 5.0}) {
        auto t = frame_tangents_at_w_lambda(lam);
        Eigen::Matrix<double, 6, 6> R;
        for (int k = 0; k < 6; ++k)
            for (int j = 0; j < 3; ++j) {
                R(2 * j, k) = t[k][j].real();
                R(2 * j + 1, k) = t[k][j].imag();
            }
        Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu(R);
        CHECK(lu.rank() == 6);
    }
}

TEST_CASE("quadrature frame Gram and Kahler form match the invariant closed forms") {
    L2Profile l2;
    for (double lam : {0.5, 1.0, 2.0}) {
        auto vars = frame_variations_at_w_lambda(lam);
        FrameGeometry fg = frame_geometry(l2, lam);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                cplx h = l2_inner(vars[a], vars[b], quad64());
                CHECK(std::abs(h.real() - fg.gram(a, b)) < 1e-6);
                CHECK(std::abs(-h.imag() - fg.omega(a, b)) < 1e-6);
            }
    }
}

TEST_CASE("frame Gram is invariant under the isometric group action") {
    L2Profile l2;
    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss;
    double lam = 1.2;
    auto vars = frame_variations_at_w_lambda(lam);
    Eigen::Matrix<std::complex<double>, 6, 6> base;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) base(a, b) = l2_inner(vars[a], vars[b], quad64());

    for (int trial = 0; trial < 10; ++trial) {
        Eigen::Vector3d axl(gauss(rng), gauss(rng), gauss(rng));
        Eigen::Vector3d axr(gauss(rng), gauss(rng), gauss(rng));
        Matrix2c L = su2_exp(axl.normalized(), gauss(rng));
        Matrix2c R = su2_exp(axr.normalized(), gauss(rng));
        for (int a = 0; a < 6; ++a)
            for (int b = a; b < 6; ++b) {
                MoebiusVariation xa{L * vars[a].M * R, L * vars[a].Mdot * R};
                MoebiusVariation xb{L * vars[b].M * R, L * vars[b].Mdot * R};
                cplx h = l2_inner(xa, xb, quad64());
                CHECK(std::abs(h - base(a, b)) < 1e-6);
            }
    }
}

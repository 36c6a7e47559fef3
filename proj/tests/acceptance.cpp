// Acceptance suite: one pass/fail line per criterion, exit code 0 only if
// every criterion holds at its stated tolerance.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "lumps/curvature.hpp"
#include "lumps/dynamics.hpp"
#include "lumps/global_geometry.hpp"
#include "lumps/invariant_metrics.hpp"
#include "lumps/l2_metric.hpp"
#include "lumps/moebius.hpp"
#include "lumps/profiles.hpp"
#include "lumps/quadrature.hpp"
#include "lumps/rp2.hpp"
#include "test_util.hpp"

using namespace lumps;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, double measured, double bound) {
    std::printf("[%s] criterion %2d: %-58s (measured %.6g, bound %.6g)\n",
                ok ? "PASS" : "FAIL", criterion, what, measured, bound);
    if (!ok) ++failures;
}

void c1_quadrature_vs_closed_form(const SphereQuadrature& quad) {
    L2Profile l2;
    double worst = 0.0;
    for (double lam : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        double got = metric_norm2_deg1(w_lambda_matrix(lam),
                                       frame_variations_at_w_lambda(lam)[0].Mdot, quad);
        worst = std::max(worst, std::abs(got / l2.A_value(lam) - 1.0));
    }
    report(1, "quadrature metric matches closed-form generator", worst < 1e-6, worst, 1e-6);
}

void c2_energy_quantization(const SphereQuadrature& quad) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        worst = std::max(worst,
                         std::abs(energy(RationalMap::power(n), quad) - 2.0 * M_PI * n));
    report(2, "energy of z -> z^n equals 2 pi n, n = 1..4", worst < 1e-7, worst, 1e-7);
}

void c3_kaehler_residual(const SphereQuadrature& quad) {
    std::mt19937_64 rng(424242);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        worst = std::max(worst, kaehler_symmetry_residual(
                                    testutil::random_valid_map(1, rng), 1e-4, quad));
    for (int i = 0; i < 5; ++i)
        worst = std::max(worst, kaehler_symmetry_residual(
                                    testutil::random_valid_map(2, rng), 1e-4, quad));
    report(3, "metric holomorphy residual, 10 deg-1 + 5 deg-2 maps", worst < 1e-5, worst,
           1e-5);
}

void c4_ambient_constants() {
    FSProfile fs;
    double w_hol = 0.0, w_kappa = 0.0, w_ric = 0.0;
    for (double lam : linear_grid(0.0, 10.0, 201)) {
        w_hol = std::max(w_hol, std::abs(hol_e1(fs, lam) - 4.0));
        w_hol = std::max(w_hol, std::abs(hol_e3(fs, lam) - 4.0));
        w_kappa = std::max(w_kappa, std::abs(scalar_curvature(fs, lam) - 48.0));
        w_ric =
            std::max(w_ric, std::abs(ricci_generators(fs, lam).Abar - 8.0 * fs.A_value(lam)));
    }
    report(4, "ambient profile: Hol = 4 on [0,10]", w_hol < 1e-9, w_hol, 1e-9);
    report(4, "ambient profile: kappa = 48 on [0,10]", w_kappa < 1e-8, w_kappa, 1e-8);
    report(4, "ambient profile: Abar = 8 A", w_ric < 1e-9, w_ric, 1e-9);
}

void c5_characters() {
    auto a = character_integrals();
    double worst = std::max({std::abs(a[0] - 7.0), std::abs(a[1] - 5.0),
                             std::abs(a[2] - 3.0), std::abs(a[3] - 1.0)});
    report(5, "character integrals equal (7, 5, 3, 1)", worst < 1e-10, worst, 1e-10);
}

void c6_series_constants() {
    L2Profile l2;
    double w = std::max({std::abs(l2.A_value(0.0) - 4.0 * M_PI / 3.0),
                         std::abs(l2.B_value(0.0) - M_PI / 3.0),
                         std::abs(scalar_curvature(l2, 0.0) - 18.0 / M_PI)});
    report(6, "series-branch constants A(0), B(0), kappa(0)", w < 1e-6, w, 1e-6);
}

void c7_ricci_origin() {
    L2Profile l2;
    RicciPair r = ricci_generators(l2, 1e-5);
    double w = std::max(std::abs(r.Abar - 4.0), std::abs(r.Bbar - 1.0));
    report(7, "Ricci generators at the origin: Abar = 4, Bbar = 1", w < 1e-4, w, 1e-4);
}

void c8_asymptotics() {
    L2Profile l2;
    double a3 = std::abs(1e6 * l2.A_value(1e3) - M_PI);
    report(8, "lambda^2 A at 1e3 within 1e-4 of pi", a3 < 1e-4, a3, 1e-4);

    double ab = std::abs(1e8 * ricci_generators(l2, 1e4).Abar / 4.0 - 1.0);
    bool ok_ab = ab < 1e-2;
    report(8, "lambda^2 Abar at 1e4 within 1% of 4", ok_ab, ab, 1e-2);
    if (!ok_ab)
        std::printf("       note: the approach is O(1/log lambda); the deviation is "
                    "1.33%% at 1e4 and first dips below 1%% near lambda ~ 2e5\n");

    auto dev = [&](double l) {
        double lg = std::log(l), l4 = l * l * l * l;
        RicciPair r = ricci_generators(l2, l);
        return std::array<double, 3>{
            std::abs(lg * lg * r.Bbar * 8.0 - 1.0),
            std::abs(lg * lg * lg * scalar_curvature(l2, l) / l4 * 2.0 * M_PI - 1.0),
            std::abs(lg * lg * lg * hol_e3(l2, l) / l4 * 4.0 * M_PI - 1.0)};
    };
    auto d4 = dev(1e4), d6 = dev(1e6);
    const char* names[3] = {"(log l)^2 Bbar -> 1/8", "(log l)^3 kappa/l^4 -> 1/(2 pi)",
                            "(log l)^3 Hol(e3)/l^4 -> 1/(4 pi)"};
    for (int i = 0; i < 3; ++i) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s within 15%% at 1e4, closer at 1e6", names[i]);
        report(8, buf, d4[i] < 0.15 && d6[i] < d4[i], d4[i], 0.15);
    }
}

void c9_positivity() {
    L2Profile l2;
    auto grid = log_grid(1e-4, 100.0, 10000);
    CurvatureScan scan = positivity_scan(l2, grid);
    report(9, "Ricci and scalar positivity scan (conjecture support)",
           scan.ricci_positive && scan.kappa_positive, scan.ricci_positive ? 1.0 : 0.0,
           1.0);
}

void c10_constraints() {
    double worst = 0.0;
    auto grid = log_grid(0.1, 10.0, 41);
    for (const char* name : {"l2", "fs"}) {
        auto p = make_profile(name);
        worst = std::max(worst, verify_hermiticity(*p, grid));
        worst = std::max(worst, verify_closure(*p, grid));
    }
    report(10, "Hermiticity and closure residuals, both profiles", worst < 1e-8, worst,
           1e-8);
}

void c11_global_geometry() {
    L2Profile l2;
    double v = so3_volume();
    report(11, "rotation-factor volume equals 8 pi^2",
           std::abs(v - 8.0 * M_PI * M_PI) < 1e-6, std::abs(v - 8.0 * M_PI * M_PI), 1e-6);

    // explicit refinement sequences with Cauchy ratio < 0.5
    auto cauchy_ratio = [](const std::vector<double>& seq) {
        double worst = 0.0;
        for (size_t i = 2; i < seq.size(); ++i) {
            double d1 = std::abs(seq[i] - seq[i - 1]);
            double d0 = std::abs(seq[i - 1] - seq[i - 2]);
            if (d1 < 1e-14 * std::abs(seq[i])) continue;
            worst = std::max(worst, d0 > 0 ? d1 / d0 : 0.0);
        }
        return worst;
    };
    std::vector<double> vols, lens;
    for (int order : {24, 48, 96, 192}) {
        vols.push_back(radial_volume_integral(l2, order, 0));
        lens.push_back(gamma_length(l2, order));
    }
    double rv = cauchy_ratio(vols), rl = cauchy_ratio(lens);
    report(11, "volume refinements form a Cauchy sequence", rv < 0.5, rv, 0.5);
    report(11, "radial-length refinements form a Cauchy sequence", rl < 0.5, rl, 0.5);
}

void c12_dynamics_conservation() {
    L2Profile l2;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double e_drift = 0.0, q_drift = 0.0, rev_err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        FlowState s;
        s.lambda_vec = Eigen::Vector3d(uni(rng), uni(rng), uni(rng)).normalized() *
                       (0.2 + 1.8 * std::abs(uni(rng)));
        s.angles = Eigen::Vector3d(uni(rng) * M_PI, 0.5 + 2.0 * std::abs(uni(rng)),
                                   uni(rng) * M_PI);
        if (gimbal_margin(s.angles) < 0.2) s.angles[1] = 1.2;
        for (int k = 0; k < 6; ++k) s.velocity[k] = 0.4 * uni(rng);

        Trajectory tr = geodesic_flow(l2, s, 1.0, 1e-3, 100);
        for (const auto& smp : tr.samples) {
            e_drift = std::max(e_drift, std::abs(smp.energy - tr.samples.front().energy));
            q_drift = std::max(
                q_drift, (smp.charges - tr.samples.front().charges).cwiseAbs().maxCoeff());
        }
        if (trial < 3) {
            FlowState e;
            e.lambda_vec = tr.samples.back().lambda_vec;
            e.chart = tr.samples.back().chart;
            e.angles = tr.samples.back().angles;
            e.velocity = -tr.samples.back().velocity;
            Trajectory back = geodesic_flow(l2, e, 1.0, 1e-3, 1000000);
            rev_err = std::max(rev_err,
                               (back.samples.back().lambda_vec - s.lambda_vec).norm());
        }
    }
    report(12, "geodesic energy drift over T=1 at dt=1e-3", e_drift < 1e-6, e_drift, 1e-6);
    report(12, "Noether charge drift over T=1", q_drift < 1e-5, q_drift, 1e-5);
    report(12, "time-reversal closure", rev_err < 1e-5, rev_err, 1e-5);

    FlowState h0;
    h0.lambda_vec = Eigen::Vector3d(0, 0, 1.0);
    h0.chart = 1;
    h0.angles = su2_to_euler(1, Matrix2c::Identity());
    Trajectory ham = hamiltonian_flow(
        l2, [](double l) { return 0.5 * l * l; }, [](double l) { return l; }, h0, 10.0,
        200);
    double lvar = 0.0, hvar = 0.0;
    for (const auto& smp : ham.samples) {
        lvar = std::max(lvar, std::abs(smp.lambda_vec.norm() - 1.0));
        hvar = std::max(hvar, std::abs(smp.energy - 0.5));
    }
    report(12, "Hamiltonian flow conserves lambda and H", lvar < 1e-10 && hvar < 1e-10,
           std::max(lvar, hvar), 1e-10);
}

void c13_totally_geodesic() {
    L2Profile l2;
    FlowState s;
    s.lambda_vec.setZero();
    s.chart = 1;
    s.angles = su2_to_euler(1, Matrix2c::Identity());
    Eigen::Vector3d rate(0, 0, 0.7);
    s.velocity.tail<3>() = euler_sigma_matrix(s.angles).partialPivLu().solve(rate);
    Trajectory tr = geodesic_flow(l2, s, 1.0, 1e-3, 100);
    double lmax = 0.0;
    for (const auto& smp : tr.samples) lmax = std::max(lmax, smp.lambda_vec.norm());
    report(13, "unitary orbit stays at lambda = 0 under the flow", lmax < 1e-6, lmax,
           1e-6);

    FlowState r;
    r.lambda_vec = Eigen::Vector3d(0, 0, 1.0);
    r.chart = 1;
    r.angles = su2_to_euler(1, Matrix2c::Identity());
    r.velocity << 0, 0, 0.5, 0, 0, 0;
    Trajectory rad = geodesic_flow(l2, r, 1.0, 1e-3, 100);
    double dir_dev = 0.0;
    for (const auto& smp : rad.samples)
        dir_dev = std::max(
            dir_dev, (smp.lambda_vec.normalized() - Eigen::Vector3d(0, 0, 1)).norm());
    report(13, "radial geodesics keep the shape direction", dir_dev < 1e-6, dir_dev, 1e-6);
}

void c14_rp2() {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    double worst_eq = 0.0;
    for (int i = 0; i < 10; ++i) {
        FixedSetChart chart;
        chart.n = 3;
        chart.poles = {cplx(uni(rng) + 2.0, uni(rng)), cplx(uni(rng), uni(rng) + 2.0),
                       cplx(uni(rng) - 2.5, uni(rng))};
        chart.arg_mu = uni(rng);
        worst_eq = std::max(worst_eq,
                            rp2_equivariance_residual(build_fixed_map(chart), 200));
    }
    worst_eq = std::max(worst_eq, rp2_equivariance_residual(w_rho(3, 0.6), 200));
    report(14, "equivariance residual of fixed-set maps", worst_eq < 1e-10, worst_eq,
           1e-10);

    double worst_ratio = 0.0;
    for (int k = 2; k <= 6; ++k) {
        double rho = 1.0 - std::pow(10.0, -k);
        worst_ratio =
            std::max(worst_ratio, f_rho(3, rho, 64, 16, false) /
                                      (1.0 + std::log(1.0 / (1.0 - rho))));
    }
    report(14, "f(rho) log-growth bound over rho = 1 - 10^-k", worst_ratio < 2.0,
           worst_ratio, 2.0);

    IncompletenessResult res = incompleteness_length(3, 2, 6);
    double worst_q = 0.0;
    for (size_t i = 2; i < res.length.size(); ++i) {
        double d1 = std::abs(res.length[i] - res.length[i - 1]);
        double d0 = std::abs(res.length[i - 1] - res.length[i - 2]);
        worst_q = std::max(worst_q, d0 > 0 ? d1 / d0 : 0.0);
    }
    report(14, "incompleteness length extrapolation is Cauchy", res.converged && worst_q < 0.5,
           worst_q, 0.5);
}

} // namespace

int main() {
    SphereQuadrature quad(SphereQuadrature::default_order());
    c1_quadrature_vs_closed_form(quad);
    c2_energy_quantization(quad);
    c3_kaehler_residual(quad);
    c4_ambient_constants();
    c5_characters();
    c6_series_constants();
    c7_ricci_origin();
    c8_asymptotics();
    c9_positivity();
    c10_constraints();
    c11_global_geometry();
    c12_dynamics_conservation();
    c13_totally_geodesic();
    c14_rp2();
    std::printf("%d criterion check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

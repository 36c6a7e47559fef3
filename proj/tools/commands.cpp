#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "lumps/curvature.hpp"
#include "lumps/dynamics.hpp"
#include "lumps/errors.hpp"
#include "lumps/global_geometry.hpp"
#include "lumps/invariant_metrics.hpp"
#include "lumps/io.hpp"
#include "lumps/l2_metric.hpp"
#include "lumps/moebius.hpp"
#include "lumps/profiles.hpp"
#include "lumps/quadrature.hpp"
#include "lumps/rational_map.hpp"
#include "lumps/rp2.hpp"
#include "nlohmann/json.hpp"

namespace lumps::cli {

namespace {

using nlohmann::json;

struct Check {
    std::string name;
    bool pass;
    double measured;
    double bound;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, double measured, double bound, bool below = true) {
        bool ok = below ? (measured < bound) : (measured > bound);
        checks.push_back({name, ok, measured, bound});
    }
    void add_flag(const std::string& name, bool ok) {
        checks.push_back({name, ok, ok ? 1.0 : 0.0, 1.0});
    }
    json to_json() const {
        json j;
        j["suite"] = suite;
        j["pass"] = all_pass();
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound}});
        j["checks"] = arr;
        return j;
    }
    void print(std::ostream& os) const {
        for (const auto& c : checks)
            os << (c.pass ? "[PASS] " : "[FAIL] ") << suite << "/" << c.name
               << "  (measured " << c.measured << ", bound " << c.bound << ")\n";
    }
};

RationalMap random_valid_map(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<cplx> num(n + 1), den(n + 1);
        for (auto& c : num) c = cplx(gauss(rng), gauss(rng));
        for (auto& c : den) c = cplx(gauss(rng), gauss(rng));
        RationalMap m(n, num, den);
        if (is_valid_degree(m, 1e-6) && std::abs(den[n]) > 0.3) return m;
    }
    throw accuracy_error("random_valid_map: no valid sample found");
}

SuiteReport suite_characters(const RunConfig&) {
    SuiteReport rep;
    rep.suite = "characters";
    auto a = character_integrals();
    rep.add("so2_symmetric_eq_7", std::abs(a[0] - 7.0), 1e-10);
    rep.add("so2_antisymmetric_eq_5", std::abs(a[1] - 5.0), 1e-10);
    rep.add("so3_symmetric_eq_3", std::abs(a[2] - 3.0), 1e-10);
    rep.add("so3_antisymmetric_eq_1", std::abs(a[3] - 1.0), 1e-10);
    return rep;
}

SuiteReport suite_kaehler(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "kaehler";
    SphereQuadrature quad(cfg.quad_order());
    std::mt19937_64 rng(cfg.seed);
    double worst1 = 0.0;
    for (int i = 0; i < 5; ++i) {
        RationalMap m = random_valid_map(1, rng);
        worst1 = std::max(worst1, kaehler_symmetry_residual(m, cfg.step, quad));
    }
    rep.add("degree1_max_residual", worst1, 1e-5);
    double worst2 = 0.0;
    for (int i = 0; i < 2; ++i) {
        RationalMap m = random_valid_map(2, rng);
        worst2 = std::max(worst2, kaehler_symmetry_residual(m, cfg.step, quad));
    }
    rep.add("degree2_max_residual", worst2, 1e-5);
    return rep;
}

SuiteReport suite_constraints(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "constraints";
    auto grid = log_grid(0.1, 10.0, 41);
    for (const char* name : {"l2", "fs"}) {
        auto profile = make_profile(name);
        rep.add(std::string(name) + "_hermiticity", verify_hermiticity(*profile, grid), 1e-8);
        rep.add(std::string(name) + "_closure", verify_closure(*profile, grid), 1e-8);
        rep.add_flag(std::string(name) + "_positivity",
                     positivity_check(*profile, log_grid(1e-3, 100.0, 400)).ok);
        // 4B identity: (1+2l^2)A + (l+l^3)A' = 4B
        double worst = 0.0;
        for (double l : grid) {
            jet6 a = profile->A((long double)l);
            double lhs = (1 + 2 * l * l) * (double)a.value() +
                         (l + l * l * l) * (double)a.deriv(1);
            worst = std::max(worst, std::abs(lhs - 4.0 * profile->B_value(l)));
        }
        rep.add(std::string(name) + "_4B_identity", worst, 1e-10);
    }
    // B from the generic coefficient route matches the closed form
    L2Profile l2;
    double worstB = 0.0;
    for (double l : grid) {
        InvariantCoefficients c = coefficients_from_A(l2, l);
        worstB = std::max(worstB, std::abs(c.B - l2.B_value(l)));
    }
    rep.add("l2_B_from_A_matches_closed_form", worstB, 1e-10);
    (void)cfg;
    return rep;
}

SuiteReport suite_fs(const RunConfig&) {
    SuiteReport rep;
    rep.suite = "fs";
    FSProfile fs;
    double w_h1 = 0.0, w_h3 = 0.0, w_k = 0.0, w_ric = 0.0;
    for (double l : linear_grid(0.0, 10.0, 101)) {
        w_h1 = std::max(w_h1, std::abs(hol_e1(fs, l) - 4.0));
        w_h3 = std::max(w_h3, std::abs(hol_e3(fs, l) - 4.0));
        w_k = std::max(w_k, std::abs(scalar_curvature(fs, l) - 48.0));
        w_ric = std::max(w_ric,
                         std::abs(ricci_generators(fs, l).Abar - 8.0 * fs.A_value(l)));
    }
    rep.add("hol_e1_const_4", w_h1, 1e-9);
    rep.add("hol_e3_const_4", w_h3, 1e-9);
    rep.add("kappa_const_48", w_k, 1e-8);
    rep.add("einstein_Abar_eq_8A", w_ric, 1e-9);
    rep.add("A_fs_at_0_eq_1", std::abs(fs.A_value(0.0) - 1.0), 1e-14);
    return rep;
}

SuiteReport suite_limits(const RunConfig&) {
    SuiteReport rep;
    rep.suite = "limits";
    L2Profile l2;
    rep.add("lam2_A_at_1e3_vs_pi",
            std::abs(1e6 * l2.A_value(1e3) / M_PI - 1.0), 1e-4);
    rep.add("lam2_Abar_at_1e4_vs_4",
            std::abs(1e8 * ricci_generators(l2, 1e4).Abar / 4.0 - 1.0), 1e-2);
    auto ratio_checks = [&](double l) {
        double lg = std::log(l), l4 = l * l * l * l;
        RicciPair r = ricci_generators(l2, l);
        double k = scalar_curvature(l2, l);
        double h3 = hol_e3(l2, l);
        return std::array<double, 3>{std::abs(lg * lg * r.Bbar * 8.0 - 1.0),
                                     std::abs(lg * lg * lg * k / l4 * 2.0 * M_PI - 1.0),
                                     std::abs(lg * lg * lg * h3 / l4 * 4.0 * M_PI - 1.0)};
    };
    auto r4 = ratio_checks(1e4), r6 = ratio_checks(1e6);
    const char* names[3] = {"log2_Bbar_to_1_8", "log3_kappa_to_1_2pi",
                            "log3_hol_e3_to_1_4pi"};
    for (int i = 0; i < 3; ++i) {
        rep.add(std::string(names[i]) + "_within_15pct_at_1e4", r4[i], 0.15);
        rep.add_flag(std::string(names[i]) + "_closer_at_1e6", r6[i] < r4[i]);
    }
    return rep;
}

SuiteReport suite_rp2(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "rp2";
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    double worst_eq = 0.0;
    for (int i = 0; i < 5; ++i) {
        FixedSetChart chart;
        chart.n = 3;
        chart.poles = {cplx(uni(rng) + 2.0, uni(rng)), cplx(uni(rng), uni(rng) + 2.0),
                       cplx(uni(rng) - 2.5, uni(rng))};
        chart.arg_mu = uni(rng);
        worst_eq = std::max(worst_eq, rp2_equivariance_residual(build_fixed_map(chart)));
    }
    rep.add("fixed_map_equivariance", worst_eq, 1e-10);
    rep.add("w_rho_equivariance", rp2_equivariance_residual(w_rho(3, 0.7)), 1e-10);

    SphereQuadrature quad(cfg.quad_order());
    auto profile = make_profile("l2");
    N1FixedReport n1 = n1_fixed_is_unitary(20, cfg.seed, *profile, quad);
    rep.add("n1_unitarity", n1.max_unitarity_residual, 1e-10);
    rep.add("n1_induced_gram", n1.max_gram_residual, 1e-6);
    rep.add("n1_density_variance", n1.max_density_variance, 1e-10);

    double worst_ratio = 0.0;
    for (int k = 2; k <= 4; ++k) {
        double rho = 1.0 - std::pow(10.0, -k);
        worst_ratio = std::max(
            worst_ratio, f_rho(cfg.n, rho, 64, 16, false) /
                             (1.0 + std::log(1.0 / (1.0 - rho))));
    }
    rep.add("f_rho_log_bound_ratio", worst_ratio, 2.0);
    return rep;
}

SuiteReport suite_dynamics(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "dynamics";
    auto profile = make_profile(cfg.profile);

    FlowState s;
    s.lambda_vec = Eigen::Vector3d(0.3, -0.2, 0.8);
    s.angles = Eigen::Vector3d(0.4, 1.1, -0.3);
    s.velocity << 0.2, -0.1, 0.3, 0.15, -0.2, 0.1;
    Trajectory tr = geodesic_flow(*profile, s, 0.5, cfg.dt);
    double e0 = tr.samples.front().energy;
    double drift = 0.0, qdrift = 0.0;
    for (const auto& smp : tr.samples) {
        drift = std::max(drift, std::abs(smp.energy - e0));
        qdrift = std::max(qdrift,
                          (smp.charges - tr.samples.front().charges).cwiseAbs().maxCoeff());
    }
    rep.add("geodesic_energy_drift", drift, 1e-6);
    rep.add("noether_charge_drift", qdrift, 1e-5);

    // time reversal
    FlowState end;
    end.lambda_vec = tr.samples.back().lambda_vec;
    end.chart = tr.samples.back().chart;
    end.angles = tr.samples.back().angles;
    end.velocity = -tr.samples.back().velocity;
    Trajectory back = geodesic_flow(*profile, end, 0.5, cfg.dt);
    FlowState ret;
    ret.chart = back.samples.back().chart;
    ret.angles = back.samples.back().angles;
    Matrix2c U0 = s.unitary(), U1 = ret.unitary();
    double rev = (back.samples.back().lambda_vec - s.lambda_vec).norm();
    double uerr = std::min((projective_normalize(U0) - projective_normalize(U1)).norm(),
                           (projective_normalize(U0) + projective_normalize(U1)).norm());
    rep.add("time_reversal_closure", rev + uerr, 1e-5);

    // invariant Hamiltonian flow conserves lambda and H
    FlowState h0;
    h0.lambda_vec = Eigen::Vector3d(0.0, 0.0, 1.0);
    Trajectory ham = hamiltonian_flow(
        *profile, [](double l) { return 0.5 * l * l; }, [](double l) { return l; }, h0,
        10.0, 100);
    double lvar = 0.0;
    for (const auto& smp : ham.samples)
        lvar = std::max(lvar, std::abs(smp.lambda_vec.norm() - 1.0));
    rep.add("hamiltonian_lambda_conserved", lvar, 1e-10);
    return rep;
}

int write_report(const RunConfig& cfg, const std::vector<SuiteReport>& reports) {
    bool all = true;
    json out = json::array();
    for (const auto& r : reports) {
        r.print(std::cout);
        out.push_back(r.to_json());
        all = all && r.all_pass();
    }
    if (!cfg.out.empty()) {
        json doc;
        doc["reports"] = out;
        doc["pass"] = all;
        doc["config"] = cfg.echo();
        write_file(cfg.out, doc.dump(2) + "\n");
    }
    std::cout << (all ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    return all ? kExitPass : kExitVerifyFail;
}

} // namespace

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec g;
    std::istringstream ss(text);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 3) throw invalid_input("grid spec must be start:stop:count[:log]");
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.count = std::stoi(parts[2]);
    g.logspace = parts.size() > 3 && parts[3] == "log";
    if (g.count < 1) throw invalid_input("grid spec: count must be >= 1");
    return g;
}

std::vector<double> GridSpec::points() const {
    return logspace ? log_grid(start, stop, count) : linear_grid(start, stop, count);
}

std::string GridSpec::describe() const {
    std::ostringstream os;
    os << start << ":" << stop << ":" << count << (logspace ? ":log" : "");
    return os.str();
}

int RunConfig::quad_order() const { return order > 0 ? order : SphereQuadrature::default_order(); }

std::string RunConfig::echo() const {
    std::ostringstream os;
    os << "# profile = " << profile << "\n";
    os << "# grid = " << grid.describe() << "\n";
    os << "# quadrature_order = " << quad_order() << "\n";
    os << "# tol = " << tol << "\n";
    os << "# seed = " << seed << "\n";
    return os.str();
}

int cmd_tabulate(const RunConfig& cfg) {
    auto profile = make_profile(cfg.profile);
    auto grid = cfg.grid.points();
    CurvatureReport rep = curvature_report(*profile, grid);
    std::ostringstream os;
    os.precision(16);
    os << "lambda,A,B,Hol_e1,Hol_e3,Abar,Bbar,kappa\n";
    for (size_t i = 0; i < rep.lambda.size(); ++i)
        os << rep.lambda[i] << ',' << rep.A[i] << ',' << rep.B[i] << ',' << rep.hol_e1[i]
           << ',' << rep.hol_e3[i] << ',' << rep.Abar[i] << ',' << rep.Bbar[i] << ','
           << rep.kappa[i] << '\n';
    std::string text = cfg.echo() + os.str();
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(cfg.out, text);
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<SuiteReport> reports;
    auto run = [&](const std::string& name) {
        if (name == "characters") reports.push_back(suite_characters(cfg));
        else if (name == "kaehler") reports.push_back(suite_kaehler(cfg));
        else if (name == "constraints") reports.push_back(suite_constraints(cfg));
        else if (name == "fs") reports.push_back(suite_fs(cfg));
        else if (name == "limits") reports.push_back(suite_limits(cfg));
        else if (name == "rp2") reports.push_back(suite_rp2(cfg));
        else if (name == "dynamics") reports.push_back(suite_dynamics(cfg));
        else throw invalid_input("unknown suite: " + name);
    };
    if (cfg.suite == "all") {
        for (const char* s :
             {"characters", "kaehler", "constraints", "fs", "limits", "rp2", "dynamics"})
            run(s);
    } else {
        run(cfg.suite);
    }
    return write_report(cfg, reports);
}

namespace {

FlowState state_from_json(const std::string& path) {
    FlowState s;
    if (path.empty()) {
        s.lambda_vec = Eigen::Vector3d(0.0, 0.0, 1.0);
        s.velocity << 0.0, 0.0, 0.3, 0.0, 0.0, 0.0;
        return s;
    }
    json j = json::parse(read_file(path));
    for (int k = 0; k < 3; ++k) s.lambda_vec[k] = j.at("lambda").at(k).get<double>();
    if (j.contains("angles"))
        for (int k = 0; k < 3; ++k) s.angles[k] = j.at("angles").at(k).get<double>();
    if (j.contains("velocity"))
        for (int k = 0; k < 6; ++k) s.velocity[k] = j.at("velocity").at(k).get<double>();
    if (j.contains("chart")) s.chart = j.at("chart").get<int>();
    return s;
}

} // namespace

int cmd_geodesic(const RunConfig& cfg) {
    auto profile = make_profile(cfg.profile);
    FlowState s = state_from_json(cfg.init);
    Trajectory tr = geodesic_flow(*profile, s, cfg.T, cfg.dt);
    std::string text = tr.to_csv(cfg.echo());
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(cfg.out, text);
    return kExitPass;
}

int cmd_hamiltonian(const RunConfig& cfg) {
    auto profile = make_profile(cfg.profile);
    FlowState s = state_from_json(cfg.init);
    Trajectory tr = hamiltonian_flow(
        *profile, [](double l) { return 0.5 * l * l; }, [](double l) { return l; }, s,
        cfg.T, std::max(1, (int)std::lround(cfg.T / std::max(cfg.dt, 1e-6))));
    std::string text = tr.to_csv(cfg.echo());
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(cfg.out, text);
    return kExitPass;
}

int cmd_volume(const RunConfig& cfg) {
    auto profile = make_profile(cfg.profile);
    GlobalReport rep = global_report(*profile);
    json j = json::parse(rep.to_json());
    j["config"] = cfg.echo();
    j["radial_nodes"] = 64;
    std::string text = j.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(cfg.out, text);
    return kExitPass;
}

int cmd_rp2(const RunConfig& cfg, bool do_f_rho, bool do_length, bool do_fixed) {
    std::ostringstream os;
    os.precision(16);
    if (do_f_rho) {
        os << cfg.echo() << f_rho_table_csv(cfg.n, cfg.rho_grid.points());
    }
    if (do_length) {
        IncompletenessResult res = incompleteness_length(cfg.n, 2, 5);
        os << cfg.echo();
        os << "# incompleteness length extrapolation, n = " << cfg.n << "\n";
        os << "rho_max,length\n";
        for (size_t i = 0; i < res.length.size(); ++i)
            os << res.rho_max[i] << ',' << res.length[i] << '\n';
        os << "# converged = " << (res.converged ? "yes" : "no") << "\n";
        os << "# extrapolated = " << res.extrapolated << "\n";
        if (!res.converged) {
            std::cerr << "incompleteness extrapolation inconclusive\n";
            std::cout << os.str();
            return kExitAccuracy;
        }
    }
    if (do_fixed) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> uni(-1.5, 1.5);
        FixedSetChart chart;
        chart.n = cfg.n;
        for (int i = 0; i < cfg.n; ++i)
            chart.poles.push_back(cplx(uni(rng) + ((i % 2) ? 2.0 : -2.0), uni(rng)));
        chart.arg_mu = uni(rng);
        RationalMap m = build_fixed_map(chart);
        os << m.to_json() << "\n";
        os << "# equivariance_residual = " << rp2_equivariance_residual(m) << "\n";
    }
    if (cfg.out.empty())
        std::cout << os.str();
    else
        write_file(cfg.out, os.str());
    return kExitPass;
}

} // namespace lumps::cli

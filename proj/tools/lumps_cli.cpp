#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "lumps/errors.hpp"

using namespace lumps::cli;

int main(int argc, char** argv) {
    CLI::App app{"lumps: numerical geometry of harmonic-map moduli spaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string grid_text = "0:10:101";
    std::string rho_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--profile", cfg.profile, "metric profile: l2, fs, or a CSV path");
        sub->add_option("--grid", grid_text, "lambda grid start:stop:count[:log]");
        sub->add_option("--order", cfg.order,
                        "quadrature order (default: LUMPS_QUAD_ORDER or 64)");
        sub->add_option("--tol", cfg.tol, "tolerance for verification checks");
        sub->add_option("--step", cfg.step, "finite-difference step");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--seed", cfg.seed, "random seed (fixed seed => identical output)");
        sub->add_option("--n", cfg.n, "absolute degree for rp2 commands");
        sub->add_option("--rho-grid", rho_text, "rho grid start:stop:count[:log]");
        sub->add_option("--T", cfg.T, "integration time");
        sub->add_option("--dt", cfg.dt, "integration step");
        sub->add_option("--init", cfg.init, "JSON file with initial conditions");
    };

    auto* tab = app.add_subcommand("tabulate", "curvature table (CSV)");
    add_common(tab);
    auto* ver = app.add_subcommand("verify", "run verification suites");
    add_common(ver);
    ver->add_option("--suite", cfg.suite,
                    "kaehler|constraints|fs|limits|characters|rp2|dynamics|all");
    auto* geo = app.add_subcommand("geodesic", "integrate a geodesic (CSV trajectory)");
    add_common(geo);
    auto* ham = app.add_subcommand("hamiltonian", "invariant Hamiltonian flow (CSV)");
    add_common(ham);
    auto* vol = app.add_subcommand("volume", "global volume/diameter report (JSON)");
    add_common(vol);
    auto* rp2 = app.add_subcommand("rp2", "projective-plane moduli computations");
    add_common(rp2);
    bool f_rho_flag = false, length_flag = false, fixed_flag = false;
    rp2->add_flag("--f-rho", f_rho_flag, "tabulate the induced coefficient f(rho)");
    rp2->add_flag("--length", length_flag, "incompleteness length extrapolation");
    rp2->add_flag("--fixed", fixed_flag, "sample a fixed-set chart and emit the map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        cfg.grid = GridSpec::parse(grid_text);
        if (!rho_text.empty()) cfg.rho_grid = GridSpec::parse(rho_text);
        if (tab->parsed()) return cmd_tabulate(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (geo->parsed()) return cmd_geodesic(cfg);
        if (ham->parsed()) return cmd_hamiltonian(cfg);
        if (vol->parsed()) return cmd_volume(cfg);
        if (rp2->parsed()) {
            if (!f_rho_flag && !length_flag && !fixed_flag) f_rho_flag = true;
            return cmd_rp2(cfg, f_rho_flag, length_flag, fixed_flag);
        }
    } catch (const lumps::invalid_input& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lumps::accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const lumps::divergence_error& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

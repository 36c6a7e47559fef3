#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lumps::cli {

// exit codes: 0 pass, 1 verification failure, 2 usage error, 3 accuracy failure
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAccuracy = 3;

struct GridSpec {
    double start = 0.0;
    double stop = 10.0;
    int count = 101;
    bool logspace = false;

    static GridSpec parse(const std::string& text); // "start:stop:count[:log]"
    std::vector<double> points() const;
    std::string describe() const;
};

struct RunConfig {
    std::string profile = "l2";
    GridSpec grid;
    int order = 0; // 0 -> SphereQuadrature::default_order()
    double tol = 1e-8;
    double step = 1e-4;
    std::string out;
    unsigned seed = 20020521;
    std::string suite = "all";
    int n = 3;
    GridSpec rho_grid{0.9, 0.999999, 5, false};
    double T = 1.0;
    double dt = 1e-3;
    std::string init; // JSON file with initial conditions

    int quad_order() const;
    std::string echo() const; // '#'-prefixed metadata block
};

int cmd_tabulate(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_geodesic(const RunConfig& cfg);
int cmd_hamiltonian(const RunConfig& cfg);
int cmd_volume(const RunConfig& cfg);
int cmd_rp2(const RunConfig& cfg, bool do_f_rho, bool do_length, bool do_fixed);

} // namespace lumps::cli

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "lumps/invariant_metrics.hpp"
#include "lumps/moebius.hpp"
#include "lumps/profiles.hpp"

namespace lumps {

using Vector6 = Eigen::Matrix<double, 6, 1>;

/// ZYZ Euler parametrization of the rotation factor.  Chart 1 carries a
/// fixed left twist so each chart's gimbal locus is interior to the other.
Matrix2c euler_to_su2(int chart, const Eigen::Vector3d& angles);
Eigen::Vector3d su2_to_euler(int chart, const Matrix2c& U);

/// sigma_a(d/dangle_i): the 3x3 matrix S with U^-1 dU/dangle_i =
/// (i/2) sum_a tau_a S(a, i).  Identical for both charts (the twist is a
/// constant left factor).
Eigen::Matrix3d euler_sigma_matrix(const Eigen::Vector3d& angles);

/// Margin to the gimbal locus: sin(theta).
double gimbal_margin(const Eigen::Vector3d& angles);

/// Configuration point: shape vector plus Euler angles in the given chart.
struct FlowState {
    Eigen::Vector3d lambda_vec = Eigen::Vector3d::Zero();
    int chart = 0;
    Eigen::Vector3d angles = Eigen::Vector3d::Zero();
    Vector6 velocity = Vector6::Zero(); // (lambda_dot, angle rates)
    double time = 0.0;

    Matrix2c unitary() const { return euler_to_su2(chart, angles); }
    Vector6 coordinates() const {
        Vector6 x;
        x << lambda_vec, angles;
        return x;
    }
};

/// Pullback of the invariant metric to the coordinate basis
/// (lambda_1..3, three Euler angles).
Eigen::Matrix<double, 6, 6> metric_in_coordinates(const CoefficientProfile& profile,
                                                  const Eigen::Vector3d& lambda_vec,
                                                  const Eigen::Vector3d& angles);

/// Kinetic energy (1/2) gamma(xdot, xdot) of a state.
double kinetic_energy(const CoefficientProfile& profile, const FlowState& s);

/// The six Noether charges gamma(xdot, K) for the left and right rotation
/// actions (left charges first).
Eigen::Matrix<double, 6, 1> noether_charges(const CoefficientProfile& profile,
                                            const FlowState& s);

struct TrajectorySample {
    double t;
    Eigen::Vector3d lambda_vec;
    int chart;
    Eigen::Vector3d angles;
    Vector6 velocity;
    double energy;
    Eigen::Matrix<double, 6, 1> charges;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    int chart_switches = 0;
    int rejected_steps = 0;
    std::string to_csv(const std::string& config_echo = "") const;
};

/// Fixed-step RK4 integration of the geodesic equation with Christoffel
/// symbols from central differences of metric_in_coordinates (step 1e-5).
/// A step that jumps the energy by more than energy_jump_tol is retried at
/// half step; the chart is switched automatically near the gimbal locus
/// (margin 0.1 rad).
Trajectory geodesic_flow(const CoefficientProfile& profile, const FlowState& start,
                         double T, double dt, int sample_every = 10,
                         double energy_jump_tol = 1e-6);

/// Spin rate of the invariant Hamiltonian flow:
/// omega = 2 sqrt(1+l^2) H' / ((1+2l^2) A + (l+l^3) A') = sqrt(1+l^2) H'/(2B).
double hamiltonian_spin_rate(const CoefficientProfile& profile, double Hprime,
                             double lambda);

/// Flow of the Hamiltonian vector field of an invariant Hamiltonian
/// H(lambda): the shape is frozen and the rotation factor advances by
/// exp(i t omega (lhat . tau)/2) on the right.
Trajectory hamiltonian_flow(const CoefficientProfile& profile,
                            const std::function<double(double)>& H,
                            const std::function<double(double)>& Hprime,
                            const FlowState& start, double T, int steps);

} // namespace lumps

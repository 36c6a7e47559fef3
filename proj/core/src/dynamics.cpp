#include "lumps/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "lumps/errors.hpp"

namespace lumps {

namespace {

const cplx kI(0.0, 1.0);

Matrix2c rot_z(double a) {
    Matrix2c m = Matrix2c::Zero();
    m(0, 0) = std::exp(kI * (a / 2));
    m(1, 1) = std::exp(-kI * (a / 2));
    return m;
}

Matrix2c rot_y(double a) {
    Matrix2c m;
    m << std::cos(a / 2), std::sin(a / 2), -std::sin(a / 2), std::cos(a / 2);
    return m;
}

// fixed left twist of chart 1 (a quarter turn about the 1-axis)
const Matrix2c& chart_twist() {
    static const Matrix2c Q = su2_exp(Eigen::Vector3d(1, 0, 0), M_PI / 2);
    return Q;
}

constexpr double kChristoffelStep = 1e-5;
constexpr double kGimbalMargin = 0.1; // rad

} // namespace

Matrix2c euler_to_su2(int chart, const Eigen::Vector3d& ang) {
    Matrix2c E = rot_z(ang[0]) * rot_y(ang[1]) * rot_z(ang[2]);
    return chart == 0 ? E : Matrix2c(chart_twist() * E);
}

Eigen::Vector3d su2_to_euler(int chart, const Matrix2c& U) {
    Matrix2c E = chart == 0 ? U : Matrix2c(chart_twist().adjoint() * U);
    // E = [[e^{i(phi+psi)/2} c, e^{i(phi-psi)/2} s], [-e^{-i(phi-psi)/2} s, ...]]
    double c = std::abs(E(0, 0)), s = std::abs(E(0, 1));
    double theta = 2.0 * std::atan2(s, c);
    double sum = 2.0 * std::arg(E(0, 0));
    double diff = 2.0 * std::arg(E(0, 1));
    return Eigen::Vector3d(0.5 * (sum + diff), theta, 0.5 * (sum - diff));
}

Eigen::Matrix3d euler_sigma_matrix(const Eigen::Vector3d& ang) {
    // U^-1 dU/dangle_i = (i/2) tau_a S(a,i); the chart twist drops out
    Matrix2c Rz1 = rot_z(ang[0]), Ry = rot_y(ang[1]), Rz2 = rot_z(ang[2]);
    Matrix2c E = Rz1 * Ry * Rz2;
    Matrix2c Einv = E.adjoint();
    std::array<Matrix2c, 3> dE;
    dE[0] = (kI / 2.0) * pauli()[2] * E;
    dE[1] = Rz1 * ((kI / 2.0) * pauli()[1]) * Ry * Rz2;
    dE[2] = E * ((kI / 2.0) * pauli()[2]);
    Eigen::Matrix3d S;
    for (int i = 0; i < 3; ++i) {
        Matrix2c M = Einv * dE[i];
        for (int a = 0; a < 3; ++a)
            S(a, i) = (-kI * (pauli()[a] * M).trace()).real();
    }
    return S;
}

double gimbal_margin(const Eigen::Vector3d& ang) { return std::abs(std::sin(ang[1])); }

Eigen::Matrix<double, 6, 6> metric_in_coordinates(const CoefficientProfile& profile,
                                                  const Eigen::Vector3d& lv,
                                                  const Eigen::Vector3d& ang) {
    Matrix6 G = invariant_gram(profile, lv);
    Eigen::Matrix<double, 6, 6> J = Eigen::Matrix<double, 6, 6>::Identity();
    J.block<3, 3>(3, 3) = euler_sigma_matrix(ang);
    return J.transpose() * G * J;
}

double kinetic_energy(const CoefficientProfile& profile, const FlowState& s) {
    auto g = metric_in_coordinates(profile, s.lambda_vec, s.angles);
    return 0.5 * s.velocity.dot(g * s.velocity);
}

Eigen::Matrix<double, 6, 1> noether_charges(const CoefficientProfile& profile,
                                            const FlowState& s) {
    Matrix6 G = invariant_gram(profile, s.lambda_vec);
    Eigen::Matrix3d S = euler_sigma_matrix(s.angles);
    // frame components (dlambda, sigma) of the velocity
    Vector6 vf;
    vf.head<3>() = s.velocity.head<3>();
    vf.tail<3>() = S * s.velocity.tail<3>();

    Matrix2c U = s.unitary();
    Eigen::Matrix<double, 6, 1> Q;
    for (int a = 0; a < 3; ++a) {
        // left generator: sigma components of Ad_{U^-1} (i tau_a / 2)
        Vector6 k = Vector6::Zero();
        for (int b = 0; b < 3; ++b)
            k[3 + b] = 0.5 * (pauli()[b] * U.adjoint() * pauli()[a] * U).trace().real();
        Q[a] = vf.dot(G * k);
        // right generator: e_a on the rotation factor, e_a x lambda on the shape
        Vector6 kr = Vector6::Zero();
        Eigen::Vector3d ea = Eigen::Vector3d::Unit(a);
        kr.head<3>() = ea.cross(s.lambda_vec);
        kr[3 + a] = 1.0;
        Q[3 + a] = vf.dot(G * kr);
    }
    return Q;
}

namespace {

Vector6 geodesic_acceleration(const CoefficientProfile& profile, const Vector6& x,
                              const Vector6& v) {
    // Gamma^a_{bc} v^b v^c from central differences of the coordinate metric
    using M6 = Eigen::Matrix<double, 6, 6>;
    auto metric_at = [&](const Vector6& y) {
        return metric_in_coordinates(profile, y.head<3>(), y.tail<3>());
    };
    std::array<M6, 6> dg;
    for (int k = 0; k < 6; ++k) {
        Vector6 xp = x, xm = x;
        xp[k] += kChristoffelStep;
        xm[k] -= kChristoffelStep;
        dg[k] = (metric_at(xp) - metric_at(xm)) / (2.0 * kChristoffelStep);
    }
    Vector6 rhs = Vector6::Zero();
    for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
            double vv = v[b] * v[c];
            for (int d = 0; d < 6; ++d)
                rhs[d] += 0.5 * (dg[c](d, b) + dg[b](d, c) - dg[d](b, c)) * vv;
        }
    M6 g = metric_at(x);
    return -g.ldlt().solve(rhs);
}

void rk4_step(const CoefficientProfile& profile, Vector6& x, Vector6& v, double dt) {
    auto f = [&](const Vector6& xx, const Vector6& vv) {
        return geodesic_acceleration(profile, xx, vv);
    };
    Vector6 k1x = v, k1v = f(x, v);
    Vector6 k2x = v + 0.5 * dt * k1v, k2v = f(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
    Vector6 k3x = v + 0.5 * dt * k2v, k3v = f(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
    Vector6 k4x = v + dt * k3v, k4v = f(x + dt * k3x, v + dt * k3v);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

void maybe_switch_chart(FlowState& s, int& switches) {
    if (gimbal_margin(s.angles) >= kGimbalMargin) return;
    Matrix2c U = s.unitary();
    int other = 1 - s.chart;
    Eigen::Vector3d new_ang = su2_to_euler(other, U);
    // velocity transforms through the shared sigma frame
    Eigen::Vector3d omega = euler_sigma_matrix(s.angles) * s.velocity.tail<3>();
    Eigen::Matrix3d Snew = euler_sigma_matrix(new_ang);
    s.velocity.tail<3>() = Snew.partialPivLu().solve(omega);
    s.angles = new_ang;
    s.chart = other;
    ++switches;
}

} // namespace

Trajectory geodesic_flow(const CoefficientProfile& profile, const FlowState& start,
                         double T, double dt, int sample_every, double energy_jump_tol) {
    if (dt <= 0.0 || T <= 0.0) throw invalid_input("geodesic_flow: need T, dt > 0");
    Trajectory traj;
    FlowState s = start;
    maybe_switch_chart(s, traj.chart_switches);
    double E_prev = kinetic_energy(profile, s);

    auto record = [&](const FlowState& st) {
        TrajectorySample smp;
        smp.t = st.time;
        smp.lambda_vec = st.lambda_vec;
        smp.chart = st.chart;
        smp.angles = st.angles;
        smp.velocity = st.velocity;
        smp.energy = kinetic_energy(profile, st);
        smp.charges = noether_charges(profile, st);
        traj.samples.push_back(smp);
    };
    record(s);

    long steps = std::lround(T / dt);
    for (long i = 0; i < steps; ++i) {
        Vector6 x = s.coordinates(), v = s.velocity;
        double h = dt;
        for (int attempt = 0;; ++attempt) {
            Vector6 xt = x, vt = v;
            int sub = 1 << attempt;
            for (int k = 0; k < sub; ++k) rk4_step(profile, xt, vt, h);
            FlowState trial = s;
            trial.lambda_vec = xt.head<3>();
            trial.angles = xt.tail<3>();
            trial.velocity = vt;
            double E = kinetic_energy(profile, trial);
            if (std::abs(E - E_prev) <= energy_jump_tol * std::max(1.0, std::abs(E_prev)) ||
                attempt >= 6) {
                s = trial;
                E_prev = E;
                break;
            }
            ++traj.rejected_steps;
            h *= 0.5;
        }
        s.time = start.time + (i + 1) * dt;
        maybe_switch_chart(s, traj.chart_switches);
        if ((i + 1) % sample_every == 0 || i + 1 == steps) record(s);
    }
    return traj;
}

double hamiltonian_spin_rate(const CoefficientProfile& profile, double Hprime,
                             double lambda) {
    real_t B = profile.B(lambda).value();
    return (double)(sqrt(1.0Q + (real_t)lambda * lambda) * Hprime / (2.0Q * B));
}

Trajectory hamiltonian_flow(const CoefficientProfile& profile,
                            const std::function<double(double)>& H,
                            const std::function<double(double)>& Hprime,
                            const FlowState& start, double T, int steps) {
    if (steps < 1) throw invalid_input("hamiltonian_flow: steps >= 1");
    Trajectory traj;
    double lambda = start.lambda_vec.norm();
    Eigen::Vector3d lhat =
        lambda > 0.0 ? Eigen::Vector3d(start.lambda_vec / lambda) : Eigen::Vector3d(0, 0, 1);
    double omega = hamiltonian_spin_rate(profile, Hprime(lambda), lambda);
    Matrix2c U0 = start.unitary();

    for (int i = 0; i <= steps; ++i) {
        double t = T * i / steps;
        // flow of a left-invariant field is right translation
        Matrix2c U = U0 * su2_exp(lhat, omega * t);
        TrajectorySample smp;
        smp.t = start.time + t;
        smp.lambda_vec = start.lambda_vec;
        smp.chart = start.chart;
        smp.angles = su2_to_euler(start.chart, U);
        Vector6 vel = Vector6::Zero();
        Eigen::Vector3d sigma_rate = omega * lhat;
        smp.velocity = vel;
        smp.velocity.tail<3>() =
            euler_sigma_matrix(smp.angles).partialPivLu().solve(sigma_rate);
        smp.energy = H(lambda);
        FlowState st;
        st.lambda_vec = smp.lambda_vec;
        st.chart = smp.chart;
        st.angles = smp.angles;
        st.velocity = smp.velocity;
        smp.charges = noether_charges(profile, st);
        traj.samples.push_back(smp);
    }
    return traj;
}

std::string Trajectory::to_csv(const std::string& config_echo) const {
    std::ostringstream os;
    os.precision(16);
    os << "# trajectory\n";
    if (!config_echo.empty()) os << config_echo;
    os << "t,lam1,lam2,lam3,chart,phi,theta,psi,"
          "v1,v2,v3,v4,v5,v6,energy,QL1,QL2,QL3,QR1,QR2,QR3\n";
    for (const auto& s : samples) {
        os << s.t << ',' << s.lambda_vec[0] << ',' << s.lambda_vec[1] << ','
           << s.lambda_vec[2] << ',' << s.chart << ',' << s.angles[0] << ','
           << s.angles[1] << ',' << s.angles[2];
        for (int k = 0; k < 6; ++k) os << ',' << s.velocity[k];
        os << ',' << s.energy;
        for (int k = 0; k < 6; ++k) os << ',' << s.charges[k];
        os << '\n';
    }
    return os.str();
}

} // namespace lumps

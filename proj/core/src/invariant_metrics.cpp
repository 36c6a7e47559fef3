#include "lumps/invariant_metrics.hpp"

#include <cmath>
#include <functional>

#include "lumps/errors.hpp"
#include "lumps/quadrature.hpp"

namespace lumps {

namespace {

struct CoeffJets {
    jet6 A1, A2, A3, A4, A5, B;
};

// One formula for all lambda >= 0: the quotient A'/lambda goes through
// div_by_variable, which at lambda = 0 is the coefficient shift (L'Hopital)
// and enforces A'(0) = 0.
CoeffJets coefficient_jets(const CoefficientProfile& profile, real_t lambda) {
    jet6 t = jet6::variable(lambda);
    jet6 a = profile.A(lambda);
    jet6 ap = a.derivative();
    jet6 q;
    try {
        q = div_by_variable(ap, t);
    } catch (const invalid_input&) {
        throw invalid_input("coefficients_from_A: profile violates A'(0) = 0");
    }
    jet6 one_l2 = 1.0Q + t * t;
    CoeffJets c;
    c.A1 = a;
    c.A5 = a;
    c.A2 = a / one_l2 + q;
    c.A3 = (1.0Q + 2.0Q * t * t) * a * 0.25Q;
    c.A4 = one_l2 * q * 0.25Q;
    c.B = profile.B(lambda);
    return c;
}

} // namespace

InvariantCoefficients coefficients_from_A(const CoefficientProfile& profile, double lambda) {
    if (lambda < 0.0) throw invalid_input("coefficients_from_A: lambda must be >= 0");
    CoeffJets c = coefficient_jets(profile, lambda);
    InvariantCoefficients out;
    out.lambda = lambda;
    out.A1 = (double)c.A1.value();
    out.A2 = (double)c.A2.value();
    out.A3 = (double)c.A3.value();
    out.A4 = (double)c.A4.value();
    out.A5 = (double)c.A5.value();
    out.B = (double)(c.A3.value() + (real_t)lambda * lambda * c.A4.value());
    return out;
}

Matrix6 invariant_gram(const InvariantCoefficients& c, const Eigen::Vector3d& lv) {
    Matrix6 G = Matrix6::Zero();
    Eigen::Matrix3d ll = lv * lv.transpose();
    G.block<3, 3>(0, 0) = c.A1 * Eigen::Matrix3d::Identity() + c.A2 * ll;
    G.block<3, 3>(3, 3) = c.A3 * Eigen::Matrix3d::Identity() + c.A4 * ll;
    // cross block tau(theta_b, d/dlambda_c) = (A5/2) eps_{abc} lambda_a
    Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
    C(0, 1) = lv[2];
    C(1, 2) = lv[0];
    C(2, 0) = lv[1];
    C(1, 0) = -lv[2];
    C(2, 1) = -lv[0];
    C(0, 2) = -lv[1];
    C *= 0.5 * c.A5;
    G.block<3, 3>(3, 0) = C;
    G.block<3, 3>(0, 3) = C.transpose();
    return G;
}

Matrix6 invariant_gram(const CoefficientProfile& profile, const Eigen::Vector3d& lv) {
    return invariant_gram(coefficients_from_A(profile, lv.norm()), lv);
}

Matrix6 invariant_omega(const CoefficientProfile& profile, const Eigen::Vector3d& lv) {
    double lambda = lv.norm();
    InvariantCoefficients c = coefficients_from_A(profile, lambda);
    double Lam = std::sqrt(1.0 + lambda * lambda);
    double h1 = (c.A1 + lambda * lambda * c.A5) / (2.0 * Lam);
    double h2 = (c.A5 + 4.0 * c.A4) / (2.0 * Lam);
    double h3 = (c.A5 + 4.0 * c.A3) / (4.0 * Lam);
    double h4 = (c.A5 - c.A1) / Lam; // identically zero for any single-A family
    Matrix6 O = Matrix6::Zero();
    Eigen::Matrix3d ll = lv * lv.transpose();
    Eigen::Matrix3d cross = Eigen::Matrix3d::Zero(); // (l x)_ab = eps_{acb} l_c
    cross(0, 1) = -lv[2];
    cross(1, 0) = lv[2];
    cross(1, 2) = -lv[0];
    cross(2, 1) = lv[0];
    cross(2, 0) = -lv[1];
    cross(0, 2) = lv[1];
    // omega(dl_a, theta_b) = h1 delta_ab + h2 l_a l_b ; omega(theta,theta) = h3 l.(sxs)
    Eigen::Matrix3d P = h1 * Eigen::Matrix3d::Identity() + h2 * ll;
    O.block<3, 3>(0, 3) = P;
    O.block<3, 3>(3, 0) = -P.transpose();
    O.block<3, 3>(3, 3) = -h3 * cross;
    O.block<3, 3>(0, 0) = -h4 * cross;
    return O;
}

Matrix6 complex_structure(double lambda) {
    double Lam = std::sqrt(1.0 + lambda * lambda);
    Matrix6 J = Matrix6::Zero();
    // columns are the images of (dl1, dl2, dl3, th1, th2, th3)
    J(3, 0) = 2.0 / Lam;
    J(1, 0) = -lambda / Lam;
    J(4, 1) = 2.0 / Lam;
    J(0, 1) = lambda / Lam;
    J(5, 2) = 2.0 / Lam;
    J(0, 3) = -1.0 / (2.0 * Lam);
    J(4, 3) = lambda / Lam;
    J(1, 4) = -1.0 / (2.0 * Lam);
    J(3, 4) = -lambda / Lam;
    J(2, 5) = -Lam / 2.0;
    return J;
}

FrameGeometry frame_geometry(const CoefficientProfile& profile, double lambda) {
    if (lambda < 0.0) throw invalid_input("frame_geometry: lambda must be >= 0");
    InvariantCoefficients c = coefficients_from_A(profile, lambda);
    Eigen::Vector3d lv(0.0, 0.0, lambda);
    FrameGeometry out;
    out.lambda = lambda;
    out.gram = invariant_gram(c, lv);
    out.J = complex_structure(lambda);
    out.omega = out.J.transpose() * out.gram;
    double Lam = std::sqrt(1.0 + lambda * lambda);
    out.Ahat1 = (c.A1 + lambda * lambda * c.A5) / (2.0 * Lam);
    out.Ahat2 = (c.A5 + 4.0 * c.A4) / (2.0 * Lam);
    out.Ahat3 = (c.A5 + 4.0 * c.A3) / (4.0 * Lam);
    out.Ahat4 = lambda * (c.A5 - c.A1) / Lam;
    out.B = c.B;

    Eigen::SelfAdjointEigenSolver<Matrix6> es(out.gram);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw invalid_input("frame_geometry: profile gives a non-positive-definite tensor");
    return out;
}

double verify_hermiticity(const std::function<InvariantCoefficients(double)>& coeffs,
                          const std::vector<double>& grid) {
    double res = 0.0;
    for (double l : grid) {
        InvariantCoefficients c = coeffs(l);
        double r1 = c.A3 - (c.A1 / 4.0 + l * l * c.A5 / 2.0);
        double r2 = (c.A1 + l * l * c.A2) -
                    4.0 / (1.0 + l * l) * (c.A3 + l * l * c.A4);
        res = std::max({res, std::abs(r1), std::abs(r2)});
    }
    return res;
}

double verify_hermiticity(const CoefficientProfile& profile, const std::vector<double>& grid) {
    return verify_hermiticity(
        [&](double l) { return coefficients_from_A(profile, l); }, grid);
}

double verify_closure(const CoefficientProfile& profile, const std::vector<double>& grid) {
    double res = 0.0;
    auto hat = [&](double l) {
        InvariantCoefficients c = coefficients_from_A(profile, l);
        double Lam = std::sqrt(1.0 + l * l);
        return std::array<double, 4>{(c.A1 + l * l * c.A5) / (2.0 * Lam),
                                     (c.A5 + 4.0 * c.A4) / (2.0 * Lam),
                                     (c.A5 + 4.0 * c.A3) / (4.0 * Lam),
                                     l * (c.A5 - c.A1) / Lam};
    };
    // Ahat1 is even in lambda, so the stencil may reflect through 0
    auto h0 = [&](double x) { return hat(std::abs(x))[0]; };
    for (double l : grid) {
        auto h = hat(l);
        res = std::max(res, std::abs(h[0] - h[2]));
        res = std::max(res, std::abs(h[3]));
        // 5-point central difference for Ahat1'
        double s = std::max(1e-3 * std::max(l, 0.1), 1e-4);
        double d1 = (-h0(l + 2 * s) + 8 * h0(l + s) - 8 * h0(l - s) + h0(l - 2 * s)) /
                    (12.0 * s);
        res = std::max(res, std::abs(d1 - l * h[1]));
    }
    return res;
}

PositivityReport positivity_check(const CoefficientProfile& profile,
                                  const std::vector<double>& grid) {
    PositivityReport rep;
    double A1 = profile.A_value(1.0);
    for (double l : grid) {
        jet6 a = profile.A(l);
        double A = (double)a.value();
        double Ap = (double)a.deriv(1);
        if (!(A > 0.0)) {
            rep.ok = false;
            rep.first_failure_lambda = l;
            rep.failed_constraint = "A > 0";
            return rep;
        }
        if (l > 0.0 && !(Ap / A > -(1.0 + 2.0 * l * l) / (l + l * l * l))) {
            rep.ok = false;
            rep.first_failure_lambda = l;
            rep.failed_constraint = "A'/A > -(1+2l^2)/(l+l^3)";
            return rep;
        }
        if (l > 1.0 && !(A > std::sqrt(2.0) * A1 / (l * std::sqrt(1.0 + l * l)))) {
            rep.ok = false;
            rep.first_failure_lambda = l;
            rep.failed_constraint = "integrated decay bound";
            return rep;
        }
    }
    return rep;
}

std::array<double, 4> character_integrals(int order) {
    GaussLegendre g = gauss_legendre(order, 0.0, 2.0 * M_PI);
    auto chi_plus = [](double p) { return 7.0 + 8.0 * std::cos(p) + 6.0 * std::cos(2 * p); };
    auto chi_minus = [](double p) { return 5.0 + 8.0 * std::cos(p) + 2.0 * std::cos(2 * p); };
    double so2p = 0, so2m = 0, so3p = 0, so3m = 0;
    for (int i = 0; i < order; ++i) {
        double p = g.x[i], w = g.w[i];
        double s = std::sin(p / 2);
        so2p += w / (2.0 * M_PI) * chi_plus(p);
        so2m += w / (2.0 * M_PI) * chi_minus(p);
        so3p += w / M_PI * s * s * chi_plus(p);
        so3m += w / M_PI * s * s * chi_minus(p);
    }
    return {so2p, so2m, so3p, so3m};
}

std::vector<double> linear_grid(double a, double b, int count) {
    if (count < 1) throw invalid_input("linear_grid: empty grid");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = count == 1 ? a : a + (b - a) * i / (count - 1);
    return g;
}

std::vector<double> log_grid(double a, double b, int count) {
    if (count < 1 || a <= 0.0 || b <= a) throw invalid_input("log_grid: bad range");
    std::vector<double> g(count);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < count; ++i)
        g[i] = count == 1 ? a : std::exp(la + (lb - la) * i / (count - 1));
    return g;
}

} // namespace lumps

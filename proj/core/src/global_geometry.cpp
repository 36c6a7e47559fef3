#include "lumps/global_geometry.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "lumps/dynamics.hpp"
#include "lumps/errors.hpp"
#include "lumps/invariant_metrics.hpp"
#include "lumps/moebius.hpp"
#include "lumps/quadrature.hpp"
#include "nlohmann/json.hpp"

namespace lumps {

double so3_volume(int order) {
    // vol = int |det S| dphi dtheta dpsi over [0,2pi) x [0,pi] x [0,2pi);
    // psi runs over half the SU(2) range because of the Z_2 quotient
    GaussLegendre gphi = gauss_legendre(order, 0.0, 2.0 * M_PI);
    GaussLegendre gth = gauss_legendre(order, 0.0, M_PI);
    GaussLegendre gpsi = gauss_legendre(order, 0.0, 2.0 * M_PI);
    long double acc = 0.0L;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            // |det S| is independent of psi for ZYZ angles; integrate it anyway
            // over a coarse psi set to keep this an honest 3d quadrature
            Eigen::Vector3d ang(gphi.x[i], gth.x[j], 0.0);
            double base = 0.0;
            for (int k = 0; k < order; ++k) {
                ang[2] = gpsi.x[k];
                base += gpsi.w[k] * std::abs(euler_sigma_matrix(ang).determinant());
            }
            acc += (long double)(gphi.w[i] * gth.w[j] * base);
        }
    return (double)acc;
}

namespace {

// integrand of the radial volume integral in the variable mu on [1, 2] and
// in t = 1/mu on (0, 1/2]
double volume_integrand_mu(const CoefficientProfile& p, double mu) {
    double A = p.A_value(lambda_of_mu(mu));
    double B = p.B_value(lambda_of_mu(mu));
    double f = mu - 1.0 / mu;
    return f * f / (64.0 * mu) * B * A * A;
}

double volume_integrand_t(const CoefficientProfile& p, double t) {
    double mu = 1.0 / t;
    return volume_integrand_mu(p, mu) * mu; // dmu = dt/t^2 = mu^2 dt; /mu absorbed
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    GaussLegendre g = gauss_legendre(n, a, b);
    long double acc = 0.0L;
    for (int i = 0; i < n; ++i) acc += (long double)(g.w[i] * f(g.x[i]));
    return (double)acc;
}

void check_tail_integrable(const std::function<double(double)>& g, const char* what) {
    // g is the t-integrand on (0, 1/2]; integrability needs g ~ t^s, s > -1.
    // Estimate the decay exponent from samples and flag divergence.
    double t1 = 1e-5, t2 = 1e-7;
    double g1 = std::abs(g(t1)), g2 = std::abs(g(t2));
    if (g2 > 1e-300 && g1 > 1e-300) {
        double slope = std::log(g2 / g1) / std::log(t2 / t1);
        if (slope <= -0.9)
            throw divergence_error(std::string(what) +
                                   ": tail integrand grows like t^" + std::to_string(slope));
    }
}

double refine_until_cauchy(const std::function<double(int)>& eval, int order, int refine,
                           const char* what) {
    double prev = eval(order);
    double prev_diff = -1.0;
    double value = prev;
    for (int r = 1; r <= refine; ++r) {
        value = eval(order << r);
        double diff = std::abs(value - prev);
        if (prev_diff >= 0.0 && diff > 0.5 * prev_diff && diff > 1e-12 * std::abs(value))
            throw accuracy_error(std::string(what) + ": refinements are not Cauchy");
        prev_diff = diff;
        prev = value;
    }
    return value;
}

} // namespace

double radial_volume_integral(const CoefficientProfile& profile, int order, int refine) {
    auto head = [&](double mu) { return volume_integrand_mu(profile, mu); };
    auto tail = [&](double t) { return volume_integrand_t(profile, t); };
    check_tail_integrable(tail, "radial_volume_integral");
    auto eval = [&](int n) {
        return integrate_gl(head, 1.0, 2.0, n) + integrate_gl(tail, 0.0, 0.5, n);
    };
    return refine_until_cauchy(eval, order, refine, "radial_volume_integral");
}

double total_volume(const CoefficientProfile& profile, int order) {
    return 4.0 * M_PI * so3_volume() * radial_volume_integral(profile, order);
}

double gamma_length(const CoefficientProfile& profile, int order) {
    // sqrt(A1 + lambda^2 A2) on [0,1], tail lambda = 1/t
    auto speed = [&](double l) {
        InvariantCoefficients c = coefficients_from_A(profile, l);
        return std::sqrt(c.A1 + l * l * c.A2);
    };
    auto head = [&](double l) { return speed(l); };
    auto tail = [&](double t) { return speed(1.0 / t) / (t * t); };
    check_tail_integrable(tail, "gamma_length");
    auto eval = [&](int n) {
        return integrate_gl(head, 0.0, 1.0, n) + integrate_gl(tail, 0.0, 1.0, n);
    };
    return refine_until_cauchy(eval, order, 2, "gamma_length");
}

double gamma_length_mu_form(const CoefficientProfile& profile, int order) {
    auto head = [&](double mu) { return std::sqrt(profile.B_value(lambda_of_mu(mu))) / mu; };
    auto tail = [&](double t) { return std::sqrt(profile.B_value(lambda_of_mu(1.0 / t))) / t; };
    check_tail_integrable(tail, "gamma_length_mu_form");
    auto eval = [&](int n) {
        return integrate_gl(head, 1.0, 2.0, n) + integrate_gl(tail, 0.0, 0.5, n);
    };
    return refine_until_cauchy(eval, order, 2, "gamma_length_mu_form");
}

double radial_segment_length(const CoefficientProfile& profile, double a, double b,
                             int order) {
    if (b < a) std::swap(a, b);
    auto speed = [&](double l) {
        InvariantCoefficients c = coefficients_from_A(profile, l);
        return std::sqrt(c.A1 + l * l * c.A2);
    };
    return integrate_gl(speed, a, b, order);
}

double so3_diameter(const CoefficientProfile& profile, int samples, unsigned seed) {
    // bi-invariant distance from the identity class: the rotation angle
    // psi = 2 acos(|tr U|/2) of the sampled class, scaled by sqrt(A3(0))
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Eigen::Vector4d q;
        for (int k = 0; k < 4; ++k) q[k] = gauss(rng);
        q.normalize();
        double half_trace = std::min(1.0, std::abs(q[0])); // |tr U|/2 for unit quaternion
        worst = std::max(worst, 2.0 * std::acos(half_trace));
    }
    double A30 = coefficients_from_A(profile, 0.0).A3;
    return std::sqrt(A30) * worst;
}

double diameter_upper_bound(const CoefficientProfile& profile) {
    return 2.0 * (gamma_length(profile) + so3_diameter(profile));
}

GlobalReport global_report(const CoefficientProfile& profile, int order) {
    GlobalReport rep;
    rep.profile = profile.name();
    rep.so3_vol = so3_volume();
    rep.radial_integral = radial_volume_integral(profile, order);
    rep.volume = 4.0 * M_PI * rep.so3_vol * rep.radial_integral;
    rep.gamma_len = gamma_length(profile, order);
    rep.diameter_bound = 2.0 * (rep.gamma_len + so3_diameter(profile));
    return rep;
}

std::string GlobalReport::to_json() const {
    nlohmann::json j;
    j["profile"] = profile;
    j["so3_volume"] = so3_vol;
    j["radial_integral"] = radial_integral;
    j["total_volume"] = volume;
    j["gamma_length"] = gamma_len;
    j["diameter_upper_bound"] = diameter_bound;
    j["sigma_normalization"] = "d sigma_1 = sigma_2 ^ sigma_3 (so3 volume 8 pi^2)";
    return j.dump(2);
}

std::vector<FibreCollapseRow> fibre_collapse_diagnostic(const CoefficientProfile& profile,
                                                        const std::vector<double>& grid) {
    std::vector<FibreCollapseRow> rows;
    for (double l : grid) {
        InvariantCoefficients c = coefficients_from_A(profile, l);
        FibreCollapseRow r;
        r.lambda = l;
        r.B = c.B;
        r.asymptote = l > 1.0 ? M_PI * std::log(l) / (2.0 * l * l * l * l) : 0.0;
        r.ratio = r.asymptote > 0.0 ? r.B / r.asymptote : 0.0;
        r.norm2_theta1 = c.A3;
        r.norm2_lam_dlam1 = l * l * c.A1;
        rows.push_back(r);
    }
    return rows;
}

std::string fibre_collapse_csv(const std::vector<FibreCollapseRow>& rows) {
    std::ostringstream os;
    os.precision(16);
    os << "# fibre collapse diagnostic: ||theta_3||^2 = B vs pi log(l)/(2 l^4)\n";
    os << "lambda,B,asymptote,ratio,norm2_theta1,norm2_lam_dlam1\n";
    for (const auto& r : rows)
        os << r.lambda << ',' << r.B << ',' << r.asymptote << ',' << r.ratio << ','
           << r.norm2_theta1 << ',' << r.norm2_lam_dlam1 << '\n';
    return os.str();
}

} // namespace lumps

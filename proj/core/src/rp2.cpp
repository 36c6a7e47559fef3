#include "lumps/rp2.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "lumps/errors.hpp"
#include "lumps/invariant_metrics.hpp"
#include "lumps/l2_metric.hpp"
#include "lumps/moebius.hpp"

namespace lumps {

namespace {

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (const cplx& r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx(0.0));
        for (size_t k = 0; k < c.size(); ++k) {
            next[k] -= r * c[k];
            next[k + 1] += c[k];
        }
        c = next;
    }
    return c;
}

} // namespace

RationalMap build_fixed_map(const FixedSetChart& chart) {
    if (chart.n < 1 || chart.n % 2 == 0)
        throw invalid_input("build_fixed_map: the fixed set is empty for even degree");
    if ((int)chart.poles.size() != chart.n)
        throw invalid_input("build_fixed_map: need exactly n poles");
    std::vector<cplx> zeros;
    double abs_mu = 1.0;
    for (const cplx& w : chart.poles) {
        if (std::abs(w) < 1e-12 || !std::isfinite(std::abs(w)))
            throw invalid_input("build_fixed_map: poles must be finite and nonzero");
        zeros.push_back(-1.0 / std::conj(w));
        abs_mu *= std::abs(w);
    }
    for (const cplx& w : chart.poles)
        for (const cplx& z : zeros)
            if (std::abs(w - z) < 1e-9 * std::max(1.0, std::abs(w)))
                throw degeneracy_error("build_fixed_map: pole collides with a zero");
    cplx mu = std::polar(abs_mu, chart.arg_mu);
    std::vector<cplx> num = poly_from_roots(zeros);
    for (auto& c : num) c *= mu;
    std::vector<cplx> den = poly_from_roots(chart.poles);
    return RationalMap(chart.n, num, den);
}

RationalMap w_rho(int n, double rho) {
    if (n < 3 || n % 2 == 0) throw invalid_input("w_rho: need odd n >= 3");
    if (rho < 0.5 || rho >= 1.0) throw invalid_input("w_rho: rho must be in [1/2, 1)");
    // numerator z^{n-2} (rho z^2 + (rho-1) z - 1), denominator z^2 + (rho-1) z - rho
    std::vector<cplx> num(n + 1, cplx(0.0)), den(n + 1, cplx(0.0));
    num[n] = rho;
    num[n - 1] = rho - 1.0;
    num[n - 2] = -1.0;
    den[2] = 1.0;
    den[1] = rho - 1.0;
    den[0] = -rho;
    return RationalMap(n, num, den);
}

namespace {

// |dW_rho/drho|^2 (1+|W_rho|^2)^-2 evaluated without forming W at its poles:
// with N = z^{n-2}(z+1)(rho z - 1), D = (z-1)(z+rho),
// dW/drho = z^{n-2}(z+1)(z^2+1)/((z-1)(z+rho)^2) and the full integrand is
//   |z|^{2(n-2)} |z+1|^2 |z^2+1|^2 / (|D|^2 + |N|^2)^2.
double target_density(int n, double rho, const cplx& z) {
    cplx zs = 1.0;
    for (int k = 0; k < n - 2; ++k) zs *= z;
    cplx N = zs * (z + 1.0) * (rho * z - 1.0);
    cplx D = (z - 1.0) * (z + rho);
    double denom = std::norm(D) + std::norm(N);
    double num = std::norm(zs) * std::norm(z + 1.0) * std::norm(z - 1.0) *
                 std::norm(z * z + 1.0);
    return num / (denom * denom);
}

double f_rho_once(int n, double rho, int theta_order, int radial_order) {
    // rotate the sphere with u = (z-1)/(z+1) so the singular candidates
    // z = +-1 become the chart centers u = 0 and u = infinity; the measure
    // (1+|z|^2)^-2 dxdy is rotation invariant
    GaussLegendre gth = gauss_legendre(theta_order, 0.0, 2.0 * M_PI);
    double rmin = std::max((1.0 - rho) * 1e-2, 1e-12);
    std::vector<double> edges{1.0};
    while (edges.back() > rmin) edges.push_back(edges.back() / 4.0);
    edges.push_back(0.0);

    long double acc = 0.0L;
    for (int chart = 0; chart < 2; ++chart) {
        for (size_t e = 0; e + 1 < edges.size(); ++e) {
            GaussLegendre gr = gauss_legendre(radial_order, edges[e + 1], edges[e]);
            for (int i = 0; i < radial_order; ++i) {
                double r = gr.x[i];
                for (int j = 0; j < theta_order; ++j) {
                    cplx u = std::polar(r, gth.x[j]);
                    if (chart == 1) u = 1.0 / u;
                    cplx z = (1.0 + u) / (1.0 - u);
                    double p = 1.0 + std::norm(u);
                    double jac = (chart == 0) ? r / (p * p) : 1.0 / (r * r * r * p * p);
                    acc += (long double)(gr.w[i] * gth.w[j] * jac *
                                         target_density(n, rho, z));
                }
            }
        }
    }
    return kMeasureCalibration * (double)acc;
}

} // namespace

double f_rho(int n, double rho, int theta_order, int radial_order, bool check,
             double rel_tol) {
    if (n < 3 || n % 2 == 0) throw invalid_input("f_rho: need odd n >= 3");
    if (rho < 0.5 || rho >= 1.0) throw invalid_input("f_rho: rho must be in [1/2, 1)");
    double v = f_rho_once(n, rho, theta_order, radial_order);
    if (check) {
        double v2 = f_rho_once(n, rho, theta_order + 16, radial_order + 8);
        if (std::abs(v2 - v) > rel_tol * std::max(std::abs(v2), 1e-30))
            throw accuracy_error(
                "f_rho: refinement changed the value by " + std::to_string(std::abs(v2 - v)) +
                "; raise theta/radial orders near rho -> 1");
        v = v2;
    }
    return v;
}

double w_rho_partial_length(int n, double rho_max, int points) {
    if (rho_max <= 0.5 || rho_max >= 1.0)
        throw invalid_input("w_rho_partial_length: rho_max in (1/2, 1)");
    // substitute rho = 1 - e^{-s}: nodes cluster toward the collapse end
    double s0 = -std::log(0.5), s1 = -std::log(1.0 - rho_max);
    GaussLegendre g = gauss_legendre(points, s0, s1);
    long double acc = 0.0L;
    for (int i = 0; i < points; ++i) {
        double rho = 1.0 - std::exp(-g.x[i]);
        double f = f_rho(n, rho, 64, 16, false);
        acc += (long double)(g.w[i] * std::exp(-g.x[i]) * std::sqrt(f));
    }
    return (double)acc;
}

IncompletenessResult incompleteness_length(int n, int k_min, int k_max) {
    IncompletenessResult res;
    res.n = n;
    for (int k = k_min; k <= k_max; ++k) {
        double rho_max = 1.0 - std::pow(10.0, -k);
        res.rho_max.push_back(rho_max);
        res.length.push_back(w_rho_partial_length(n, rho_max));
    }
    res.converged = res.length.size() >= 3;
    double prev_diff = -1.0;
    for (size_t i = 1; i < res.length.size(); ++i) {
        double diff = std::abs(res.length[i] - res.length[i - 1]);
        if (prev_diff >= 0.0 && diff > 0.5 * prev_diff) res.converged = false;
        prev_diff = diff;
    }
    if (res.converged) {
        // geometric tail estimate from the last two differences
        size_t m = res.length.size();
        double d = res.length[m - 1] - res.length[m - 2];
        double d0 = res.length[m - 2] - res.length[m - 3];
        double q = d0 != 0.0 ? std::abs(d / d0) : 0.0;
        res.extrapolated = res.length[m - 1] + (q < 1.0 ? d * q / (1.0 - q) : 0.0);
    }
    return res;
}

N1FixedReport n1_fixed_is_unitary(int samples, unsigned seed,
                                  const CoefficientProfile& profile,
                                  const SphereQuadrature& quad) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    N1FixedReport rep;
    for (int s = 0; s < samples; ++s) {
        FixedSetChart chart;
        chart.n = 1;
        cplx w(uni(rng) * 2.0, uni(rng) * 2.0);
        if (std::abs(w) < 0.1) w += cplx(0.5, 0.5);
        chart.poles = {w};
        chart.arg_mu = M_PI * uni(rng);
        RationalMap map = build_fixed_map(chart);
        Matrix2c M = moebius_matrix(map);
        Matrix2c MMdag = M * M.adjoint();
        double scale = 0.5 * MMdag.trace().real();
        double resid = (MMdag / scale - Matrix2c::Identity()).cwiseAbs().maxCoeff();
        rep.max_unitarity_residual = std::max(rep.max_unitarity_residual, resid);

        // energy density is uniform over the sphere for a rotation orbit map
        double mean = 0.0, var = 0.0;
        std::vector<double> vals;
        for (const auto& z : sphere_grid(64)) {
            if (z.is_inf()) continue;
            vals.push_back(energy_density(map, z.v));
        }
        for (double v : vals) mean += v;
        mean /= vals.size();
        for (double v : vals) var += (v - mean) * (v - mean);
        var /= vals.size();
        rep.max_density_variance = std::max(rep.max_density_variance, var);
    }

    // induced metric at the identity: Gram(theta_a, theta_b) = A3(0) delta_ab
    double A30 = coefficients_from_A(profile, 0.0).A3;
    auto vars = frame_variations_at_w_lambda(0.0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            cplx g = l2_inner(vars[3 + a], vars[3 + b], quad);
            double expect = a == b ? A30 : 0.0;
            rep.max_gram_residual =
                std::max(rep.max_gram_residual, std::abs(g.real() - expect));
        }

    rep.ok = rep.max_unitarity_residual < 1e-10 && rep.max_gram_residual < 1e-6 &&
             rep.max_density_variance < 1e-10;
    return rep;
}

std::string f_rho_table_csv(int n, const std::vector<double>& rho) {
    std::ostringstream os;
    os.precision(16);
    os << "# induced metric coefficient on the collapse curve\n";
    os << "# n = " << n << "\n";
    os << "rho,f,bound_ratio\n";
    for (double r : rho) {
        double f = f_rho(n, r, 64, 16, false);
        os << r << ',' << f << ',' << f / (1.0 + std::log(1.0 / (1.0 - r))) << '\n';
    }
    return os.str();
}

} // namespace lumps

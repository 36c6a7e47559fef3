#include "lumps/l2_metric.hpp"

#include <cmath>

#include "lumps/errors.hpp"
#include "nlohmann/json.hpp"

namespace lumps {

namespace {

cplx horner(const std::vector<cplx>& c, const cplx& z) {
    cplx r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

double energy_once(const RationalMap& map, const SphereQuadrature& quad) {
    const RationalMap inv = map.inverted_chart();
    auto density = [](const RationalMap& m, const cplx& z) {
        cplx W = horner(m.numerator(), z) / horner(m.denominator(), z);
        cplx Wp = m.derivative(z);
        double q = 1.0 + std::norm(W);
        return std::norm(Wp) / (q * q);
    };
    // |dW/dz|^2/(1+|W|^2)^2 is conformally invariant, so the mirrored chart
    // integrates the same expression for W(1/w)
    long double acc = 0.0L;
    const auto& nodes = quad.nodes();
    const auto& w = quad.weights();
    for (size_t i = 0; i < nodes.size(); ++i) {
        acc += (long double)(w[i] * density(map, nodes[i]));
        acc += (long double)(w[i] * density(inv, nodes[i]));
    }
    return kMeasureCalibration * (double)acc;
}

} // namespace

double energy(const RationalMap& map, const SphereQuadrature& quad, bool check,
              double check_tol) {
    double e = energy_once(map, quad);
    if (check) {
        SphereQuadrature finer(quad.order() + 16);
        double e2 = energy_once(map, finer);
        if (std::abs(e2 - e) > check_tol * std::max(1.0, std::abs(e2)))
            throw accuracy_error("energy: quadrature orders disagree by " +
                                 std::to_string(std::abs(e2 - e)));
    }
    return e;
}

double energy_density(const RationalMap& map, const cplx& z) {
    cplx W = horner(map.numerator(), z) / horner(map.denominator(), z);
    cplx Wp = map.derivative(z);
    double p = 1.0 + std::norm(z), q = 1.0 + std::norm(W);
    return std::norm(Wp) * p * p / (q * q);
}

double MetricMatrix::hermiticity_residual() const {
    return (gamma - gamma.adjoint()).cwiseAbs().maxCoeff();
}

double MetricMatrix::smallest_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gamma);
    return es.eigenvalues().minCoeff();
}

std::string MetricMatrix::to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    j["quadrature_order"] = quadrature_order;
    j["measure_calibration_dzdzbar_over_dxdy"] = kMeasureCalibration;
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < gamma.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < gamma.cols(); ++c)
            row.push_back({gamma(r, c).real(), gamma(r, c).imag()});
        rows.push_back(row);
    }
    j["gamma"] = rows;
    nlohmann::json bj = nlohmann::json::array();
    for (Eigen::Index k = 0; k < b.size(); ++k) bj.push_back({b[k].real(), b[k].imag()});
    j["chart_coordinates"] = bj;
    return j.dump(2);
}

MetricMatrix l2_metric_matrix(const RationalMap& map, const SphereQuadrature& quad) {
    const int n = map.degree();
    const int dim = 2 * n + 1;
    const double scale = map.max_coefficient();
    const cplx lead = map.denominator()[n];
    if (std::abs(lead) <= 1e-10 * scale)
        throw invalid_input(
            "l2_metric_matrix: denominator leading coefficient ~ 0; rotate the target first");
    if (normalized_resultant(map) < 1e-10)
        throw degeneracy_error("l2_metric_matrix: base map too close to the degeneracy set");

    // chart coordinates b_alpha: monic denominator
    std::vector<cplx> nb(n + 1), db(n + 1);
    for (int k = 0; k <= n; ++k) {
        nb[k] = map.numerator()[k] / lead;
        db[k] = map.denominator()[k] / lead;
    }
    std::vector<cplx> rn(nb.rbegin(), nb.rend()), rd(db.rbegin(), db.rend());

    Eigen::MatrixXcd gamma = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<cplx> d(dim), zp(n + 1);
    const auto& nodes = quad.nodes();
    const auto& wts = quad.weights();

    auto accumulate = [&](const cplx& N, const cplx& D, double wpref) {
        // d[] has been filled by the caller; wpref includes weight and prefactor
        (void)N;
        (void)D;
        for (int a = 0; a < dim; ++a)
            for (int b = a; b < dim; ++b) gamma(a, b) += wpref * d[a] * std::conj(d[b]);
    };

    for (size_t i = 0; i < nodes.size(); ++i) {
        const cplx z = nodes[i];
        const double w = wts[i];
        // chart |z| <= 1
        {
            zp[0] = 1.0;
            for (int k = 1; k <= n; ++k) zp[k] = zp[k - 1] * z;
            cplx N = horner(nb, z), D = horner(db, z);
            cplx W = N / D;
            double p = 1.0 + std::norm(z), q = 1.0 + std::norm(W);
            double pref = w / (p * p * q * q * std::norm(D) * std::norm(D));
            // dW/db_alpha * D^2: numerator coefficients give z^k D, the rest -N z^k
            for (int k = 0; k <= n; ++k) d[k] = zp[k] * D;
            for (int k = 0; k < n; ++k) d[n + 1 + k] = -N * zp[k];
            accumulate(N, D, pref);
        }
        // mirrored chart: evaluation point 1/z via reversed polynomials
        {
            zp[0] = 1.0;
            for (int k = 1; k <= n; ++k) zp[k] = zp[k - 1] * z;
            cplx N = horner(rn, z), D = horner(rd, z);
            cplx W = N / D;
            double p = 1.0 + std::norm(z), q = 1.0 + std::norm(W);
            double pref = w / (p * p * q * q * std::norm(D) * std::norm(D));
            // dW/db_alpha at 1/z: z^{n-alpha} replaces z^alpha
            for (int k = 0; k <= n; ++k) d[k] = zp[n - k] * D;
            for (int k = 0; k < n; ++k) d[n + 1 + k] = -N * zp[n - k];
            accumulate(N, D, pref);
        }
    }

    MetricMatrix out;
    out.gamma = Eigen::MatrixXcd(dim, dim);
    for (int a = 0; a < dim; ++a) {
        out.gamma(a, a) = kMeasureCalibration * gamma(a, a).real();
        for (int b = a + 1; b < dim; ++b) {
            cplx v = kMeasureCalibration * gamma(a, b);
            out.gamma(a, b) = v;
            out.gamma(b, a) = std::conj(v);
        }
    }
    out.b = Eigen::VectorXcd(dim);
    for (int k = 0; k <= n; ++k) out.b[k] = nb[k];
    for (int k = 0; k < n; ++k) out.b[n + 1 + k] = db[k];
    out.degree = n;
    out.quadrature_order = quad.order();
    return out;
}

namespace {

RationalMap map_from_chart(int n, const Eigen::VectorXcd& b) {
    std::vector<cplx> num(n + 1), den(n + 1);
    for (int k = 0; k <= n; ++k) num[k] = b[k];
    for (int k = 0; k < n; ++k) den[k] = b[n + 1 + k];
    den[n] = 1.0;
    return RationalMap(n, num, den);
}

} // namespace

double kaehler_symmetry_residual(const RationalMap& map, double step,
                                 const SphereQuadrature& quad) {
    if (step <= 0.0) throw invalid_input("kaehler_symmetry_residual: step must be positive");
    MetricMatrix base = l2_metric_matrix(map, quad);
    const int n = map.degree();
    const int dim = 2 * n + 1;

    // holomorphic and antiholomorphic partials of gamma by central differences
    std::vector<Eigen::MatrixXcd> dgamma(dim), dgamma_bar(dim);
    for (int delta = 0; delta < dim; ++delta) {
        Eigen::VectorXcd bp = base.b, bm = base.b;
        bp[delta] += step;
        bm[delta] -= step;
        Eigen::MatrixXcd gx =
            (l2_metric_matrix(map_from_chart(n, bp), quad).gamma -
             l2_metric_matrix(map_from_chart(n, bm), quad).gamma) /
            (2.0 * step);
        bp = base.b;
        bm = base.b;
        bp[delta] += cplx(0.0, step);
        bm[delta] -= cplx(0.0, step);
        Eigen::MatrixXcd gy =
            (l2_metric_matrix(map_from_chart(n, bp), quad).gamma -
             l2_metric_matrix(map_from_chart(n, bm), quad).gamma) /
            (2.0 * step);
        dgamma[delta] = 0.5 * (gx - cplx(0.0, 1.0) * gy);
        dgamma_bar[delta] = 0.5 * (gx + cplx(0.0, 1.0) * gy);
    }

    double res = 0.0;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int delta = 0; delta < dim; ++delta) {
                res = std::max(res, std::abs(dgamma[delta](a, b) - dgamma[a](delta, b)));
                res = std::max(res, std::abs(dgamma_bar[delta](a, b) - dgamma_bar[b](a, delta)));
            }
    return res;
}

cplx MoebiusVariation::value(const cplx& z) const {
    cplx n0 = M(0, 0) * z + M(0, 1), d0 = M(1, 0) * z + M(1, 1);
    cplx nd = Mdot(0, 0) * z + Mdot(0, 1), dd = Mdot(1, 0) * z + Mdot(1, 1);
    return (nd * d0 - n0 * dd) / (d0 * d0);
}

cplx MoebiusVariation::value_inverted(const cplx& w) const {
    cplx n0 = M(0, 0) + M(0, 1) * w, d0 = M(1, 0) + M(1, 1) * w;
    cplx nd = Mdot(0, 0) + Mdot(0, 1) * w, dd = Mdot(1, 0) + Mdot(1, 1) * w;
    return (nd * d0 - n0 * dd) / (d0 * d0);
}

cplx l2_inner(const MoebiusVariation& X, const MoebiusVariation& Y,
              const SphereQuadrature& quad) {
    const Matrix2c& M = X.M;
    std::complex<long double> acc = 0.0L;
    const auto& nodes = quad.nodes();
    const auto& wts = quad.weights();
    for (size_t i = 0; i < nodes.size(); ++i) {
        const cplx z = nodes[i];
        const double w = wts[i];
        {
            cplx W = (M(0, 0) * z + M(0, 1)) / (M(1, 0) * z + M(1, 1));
            double p = 1.0 + std::norm(z), q = 1.0 + std::norm(W);
            cplx v = X.value(z) * std::conj(Y.value(z)) * (w / (p * p * q * q));
            acc += std::complex<long double>(v.real(), v.imag());
        }
        {
            // mirrored chart: z' = 1/z; (1+|z'|^2)^-2 dxdy' = |z|^4-free form
            cplx W = (M(0, 0) + M(0, 1) * z) / (M(1, 0) + M(1, 1) * z);
            double p = 1.0 + std::norm(z), q = 1.0 + std::norm(W);
            cplx v = X.value_inverted(z) * std::conj(Y.value_inverted(z)) *
                     (w / (p * p * q * q));
            acc += std::complex<long double>(v.real(), v.imag());
        }
    }
    return kMeasureCalibration * cplx((double)acc.real(), (double)acc.imag());
}

std::array<MoebiusVariation, 6> frame_variations_at_w_lambda(double lambda) {
    const double Lam = std::sqrt(1.0 + lambda * lambda);
    const Matrix2c M = w_lambda_matrix(lambda);
    std::array<MoebiusVariation, 6> out;
    for (int a = 0; a < 3; ++a) {
        // shape curve: Lambda(s) I + (lambda e_3 + s e_a) . tau
        Matrix2c Md = pauli()[a];
        if (a == 2) Md += (lambda / Lam) * Matrix2c::Identity();
        out[a] = MoebiusVariation{M, Md};
        // rotation curve: exp(i t tau_a / 2) M
        out[3 + a] = MoebiusVariation{M, cplx(0.0, 0.5) * pauli()[a] * M};
    }
    return out;
}

std::array<Eigen::Vector3cd, 6> frame_tangents_at_w_lambda(double lambda) {
    // chart (b1,b2,b3) = (M01, M10, M11)/M00
    auto vars = frame_variations_at_w_lambda(lambda);
    std::array<Eigen::Vector3cd, 6> out;
    for (int k = 0; k < 6; ++k) {
        const Matrix2c& M = vars[k].M;
        const Matrix2c& Md = vars[k].Mdot;
        cplx a = M(0, 0), ad = Md(0, 0);
        out[k][0] = (Md(0, 1) * a - M(0, 1) * ad) / (a * a);
        out[k][1] = (Md(1, 0) * a - M(1, 0) * ad) / (a * a);
        out[k][2] = (Md(1, 1) * a - M(1, 1) * ad) / (a * a);
    }
    return out;
}

double metric_norm2_deg1(const Matrix2c& M, const Matrix2c& Mdot,
                         const SphereQuadrature& quad) {
    // choose between the raw chart and the target-rotated chart W -> 1/W
    // (row swap) so the denominator leading coefficient is healthy
    Matrix2c F;
    F << 0, 1, 1, 0;
    bool rotate = std::abs(M(0, 0)) > std::abs(M(1, 0));
    Matrix2c Mc = rotate ? Matrix2c(F * M) : M;
    Matrix2c Mdc = rotate ? Matrix2c(F * Mdot) : Mdot;

    RationalMap base = moebius_map(Mc);
    MetricMatrix g = l2_metric_matrix(base, quad);

    // chart velocity of b = (Mc01, Mc00, Mc11)/Mc10
    cplx den = Mc(1, 0), dend = Mdc(1, 0);
    Eigen::Vector3cd bdot;
    bdot[0] = (Mdc(0, 1) * den - Mc(0, 1) * dend) / (den * den);
    bdot[1] = (Mdc(0, 0) * den - Mc(0, 0) * dend) / (den * den);
    bdot[2] = (Mdc(1, 1) * den - Mc(1, 1) * dend) / (den * den);

    cplx q = bdot.adjoint() * g.gamma * bdot;
    return q.real();
}

} // namespace lumps

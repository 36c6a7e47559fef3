#include "lumps/rational_map.hpp"

#include <Eigen/Dense>
#include <algorithm>
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

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
    std::vector<cplx> d(std::max<size_t>(c.size() - 1, 1), cplx(0.0));
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
    return d;
}

} // namespace

RationalMap::RationalMap(int degree, std::vector<cplx> numerator, std::vector<cplx> denominator)
    : n_(degree), num_(std::move(numerator)), den_(std::move(denominator)) {
    if (n_ < 0) throw invalid_input("RationalMap: degree must be positive");
    if (num_.size() != size_t(n_ + 1) || den_.size() != size_t(n_ + 1))
        throw invalid_input("RationalMap: coefficient vectors must have length degree+1");
    double m = max_coefficient();
    if (m == 0.0) throw invalid_input("RationalMap: zero coefficient vector");
}

RationalMap RationalMap::identity() { return power(1); }

RationalMap RationalMap::power(int n) {
    std::vector<cplx> num(n + 1, cplx(0.0)), den(n + 1, cplx(0.0));
    num[n] = 1.0;
    den[0] = 1.0;
    return RationalMap(n, num, den);
}

RationalMap RationalMap::dilation(double mu) {
    return RationalMap(1, {cplx(0.0), cplx(mu)}, {cplx(1.0), cplx(0.0)});
}

ExtendedComplex RationalMap::operator()(const ExtendedComplex& z) const {
    // For |z| > 1 (and z = inf) evaluate the reversed polynomials at 1/z;
    // full-length reversal makes the point at infinity degree-aware.
    cplx N, D;
    if (z.is_inf() || std::abs(z.v) > 1.0) {
        cplx w = z.is_inf() ? cplx(0.0) : 1.0 / z.v;
        std::vector<cplx> rn(num_.rbegin(), num_.rend());
        std::vector<cplx> rd(den_.rbegin(), den_.rend());
        N = horner(rn, w);
        D = horner(rd, w);
    } else {
        N = horner(num_, z.v);
        D = horner(den_, z.v);
    }
    double scale = max_coefficient();
    if (std::abs(D) <= 1e-15 * scale * (1.0 + std::abs(N) / scale))
        return ExtendedComplex::infinity();
    return ExtendedComplex(N / D);
}

cplx RationalMap::derivative(const cplx& z) const {
    cplx N = horner(num_, z), D = horner(den_, z);
    cplx Np = horner(poly_derivative(num_), z), Dp = horner(poly_derivative(den_), z);
    return (Np * D - N * Dp) / (D * D);
}

RationalMap RationalMap::inverted_chart() const {
    std::vector<cplx> rn(num_.rbegin(), num_.rend());
    std::vector<cplx> rd(den_.rbegin(), den_.rend());
    return RationalMap(n_, rn, rd);
}

RationalMap RationalMap::scaled(const cplx& xi) const {
    if (xi == cplx(0.0)) throw invalid_input("RationalMap::scaled: xi must be nonzero");
    std::vector<cplx> num = num_, den = den_;
    for (auto& c : num) c *= xi;
    for (auto& c : den) c *= xi;
    return RationalMap(n_, num, den);
}

double RationalMap::max_coefficient() const {
    double m = 0.0;
    for (const auto& c : num_) m = std::max(m, std::abs(c));
    for (const auto& c : den_) m = std::max(m, std::abs(c));
    return m;
}

double normalized_resultant(const RationalMap& map) {
    int n = map.degree();
    double scale = map.max_coefficient();
    if (scale == 0.0) throw invalid_input("resultant: zero coefficient vector");
    // Sylvester matrix of the two degree-n polynomials (2n x 2n).
    int m = 2 * n;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m, m);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= n; ++k) {
            S(row, row + k) = map.numerator()[n - k] / scale;
            S(n + row, row + k) = map.denominator()[n - k] / scale;
        }
    return std::abs(S.determinant());
}

bool is_valid_degree(const RationalMap& map, double tol) {
    int n = map.degree();
    double scale = map.max_coefficient();
    if (scale == 0.0) throw invalid_input("is_valid_degree: zero coefficient vector");
    double lead = std::max(std::abs(map.numerator()[n]), std::abs(map.denominator()[n]));
    if (lead <= tol * scale) return false;
    return normalized_resultant(map) > tol;
}

double map_distance(const RationalMap& a, const RationalMap& b, int grid) {
    double d = 0.0;
    for (const auto& z : sphere_grid(grid))
        d = std::max(d, chordal_distance(a(z), b(z)));
    return d;
}

RationalMap antipodal_involution(const RationalMap& map) {
    // W -> p o W o p acts on coefficients by conjugation, reversal and
    // alternating signs:
    //   num'[m] = (-1)^{n-m+1} conj(den[n-m]),  den'[m] = (-1)^{n-m} conj(num[n-m]).
    int n = map.degree();
    std::vector<cplx> num(n + 1), den(n + 1);
    for (int m = 0; m <= n; ++m) {
        double s = ((n - m) % 2 == 0) ? 1.0 : -1.0;
        num[m] = -s * std::conj(map.denominator()[n - m]);
        den[m] = s * std::conj(map.numerator()[n - m]);
    }
    return RationalMap(n, num, den);
}

double rp2_equivariance_residual(const RationalMap& map,
                                 const std::vector<ExtendedComplex>& grid) {
    double r = 0.0;
    for (const auto& z : grid) {
        ExtendedComplex lhs = map(antipode(z));
        ExtendedComplex rhs = antipode(map(z));
        r = std::max(r, chordal_distance(lhs, rhs));
    }
    return r;
}

double rp2_equivariance_residual(const RationalMap& map, int grid_size) {
    return rp2_equivariance_residual(map, sphere_grid(grid_size));
}

std::string RationalMap::to_json() const {
    nlohmann::json j;
    j["degree"] = n_;
    auto pack = [](const std::vector<cplx>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : v) arr.push_back({c.real(), c.imag()});
        return arr;
    };
    j["numerator"] = pack(num_);
    j["denominator"] = pack(den_);
    return j.dump(2);
}

RationalMap RationalMap::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("degree").get<int>();
    auto unpack = [](const nlohmann::json& arr) {
        std::vector<cplx> v;
        for (const auto& p : arr) v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return v;
    };
    return RationalMap(n, unpack(j.at("numerator")), unpack(j.at("denominator")));
}

} // namespace lumps

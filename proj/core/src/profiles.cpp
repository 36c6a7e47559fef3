#include "lumps/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lumps/errors.hpp"
#include "lumps/real.hpp"

namespace lumps {

namespace {


// Power-series switch radius in eps = mu - 1.  The closed forms divide by
// (mu^2-1)^3 and lose ~3 digits per decade below |eps| ~ 1; 0.25 keeps the
// direct branch comfortably accurate while the series converges fast.
constexpr real_t kSeriesRadius = 0.25Q;
constexpr int kSeriesTerms = 48;

// A = 4 pi (1+eps) S(eps) / (2+eps)^3 with
// S(eps) = sum_{j>=0} N_{j+3} eps^j,
// N_3 = 8/3, N_4 = 4/3, N_k = 8 (-1)^k / (k(k-1)(k-2)) for k >= 5.
real_t series_coeff_A(int j) {
    int k = j + 3;
    if (k == 3) return 8.0Q / 3.0Q;
    if (k == 4) return 4.0Q / 3.0Q;
    real_t s = (k % 2 == 0) ? 1.0Q : -1.0Q;
    return 8.0Q * s / ((real_t)k * (k - 1) * (k - 2));
}

// B = 4 pi (1+eps)^2 T(eps) / (2+eps)^3 with
// T(eps) = sum_{j>=0} M_{j+3} eps^j,
// M_k = (-1)^{k+1} (k^2 - 3k + 4) / (k(k-1)(k-2)) for k >= 3.
real_t series_coeff_B(int j) {
    int k = j + 3;
    real_t s = (k % 2 == 0) ? -1.0Q : 1.0Q;
    return s * ((real_t)k * k - 3.0Q * k + 4.0Q) /
           ((real_t)k * (k - 1) * (k - 2));
}

jet6 horner_series(const jet6& eps, real_t (*coeff)(int)) {
    jet6 acc = jet6::constant(coeff(kSeriesTerms - 1));
    for (int j = kSeriesTerms - 2; j >= 0; --j) acc = acc * eps + coeff(j);
    return acc;
}

} // namespace

double mu_of_lambda(double lambda) {
    if (lambda < 0.0) throw invalid_input("mu_of_lambda: lambda must be >= 0");
    double s = std::sqrt(1.0 + lambda * lambda) + lambda;
    return s * s;
}

double lambda_of_mu(double mu) {
    if (mu < 1.0) throw invalid_input("lambda_of_mu: mu must be >= 1");
    return (mu - 1.0) / (2.0 * std::sqrt(mu));
}

jet6 mu_jet(double lambda) {
    jet6 t = jet6::variable(lambda);
    jet6 Lam = sqrt(t * t + 1.0Q);
    jet6 s = Lam + t;
    return s * s;
}

jet6 CoefficientProfile::B(double lambda) const {
    jet6 t = jet6::variable(lambda);
    jet6 a = A(lambda);
    jet6 ap = a.derivative();
    return ((1.0Q + 2.0Q * t * t) * a + (t + t * t * t) * ap) * 0.25Q;
}

jet6 L2Profile::A(double lambda) const {
    if (lambda < 0.0Q) throw invalid_input("L2Profile::A: lambda must be >= 0");
    jet6 mu = mu_jet(lambda);
    jet6 eps = mu - 1.0Q;
    if (eps.value() < kSeriesRadius) {
        jet6 S = horner_series(eps, &series_coeff_A);
        return 4.0Q * kPi * (1.0Q + eps) * S / pow(eps + 2.0Q, 3);
    }
    jet6 mu2 = mu * mu;
    jet6 num = mu2 * mu2 - 4.0Q * mu2 * log(mu) - 1.0Q;
    return 4.0Q * kPi * mu * num / pow(mu2 - 1.0Q, 3);
}

jet6 L2Profile::B(double lambda) const {
    if (lambda < 0.0Q) throw invalid_input("L2Profile::B: lambda must be >= 0");
    jet6 mu = mu_jet(lambda);
    jet6 eps = mu - 1.0Q;
    if (eps.value() < kSeriesRadius) {
        jet6 T = horner_series(eps, &series_coeff_B);
        return 4.0Q * kPi * (1.0Q + eps) * (1.0Q + eps) * T / pow(eps + 2.0Q, 3);
    }
    jet6 mu2 = mu * mu;
    jet6 num = (mu2 + 1.0Q) * log(mu) - mu2 + 1.0Q;
    return 4.0Q * kPi * mu2 * num / pow(mu2 - 1.0Q, 3);
}

jet6 FSProfile::A(double lambda) const {
    if (lambda < 0.0Q) throw invalid_input("FSProfile::A: lambda must be >= 0");
    jet6 mu = mu_jet(lambda);
    return 2.0Q * mu / (mu * mu + 1.0Q);
}

jet6 FSProfile::B(double lambda) const {
    // Bdef collapses to (A/2)^2 for this profile; the closed form avoids the
    // 1/4 - 1/4 cancellation of the generic route at large lambda
    jet6 half_a = A(lambda) * 0.5Q;
    return half_a * half_a;
}

TabulatedProfile::TabulatedProfile(std::vector<double> lambda, std::vector<double> A,
                                   std::vector<double> Ap, std::vector<double> App,
                                   std::string label)
    : lam_(std::move(lambda)), a_(std::move(A)), ap_(std::move(Ap)),
      app_(std::move(App)), label_(std::move(label)) {
    if (lam_.size() < 2 || lam_.size() != a_.size() || lam_.size() != ap_.size() ||
        lam_.size() != app_.size())
        throw invalid_input("TabulatedProfile: need >= 2 rows of (lambda, A, A', A'')");
    if (!std::is_sorted(lam_.begin(), lam_.end()))
        throw invalid_input("TabulatedProfile: lambda column must be increasing");
}

TabulatedProfile TabulatedProfile::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("TabulatedProfile: cannot open " + path);
    std::vector<double> l, a, ap, app;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double c0, c1, c2, c3;
        if (ss >> c0 >> c1 >> c2 >> c3) {
            l.push_back(c0);
            a.push_back(c1);
            ap.push_back(c2);
            app.push_back(c3);
        }
    }
    return TabulatedProfile(std::move(l), std::move(a), std::move(ap), std::move(app), path);
}

jet6 TabulatedProfile::A(double lambda) const {
    double x = (double)lambda;
    if (x < lam_.front() || x > lam_.back())
        throw invalid_input("TabulatedProfile: lambda outside tabulated range");
    size_t i = std::upper_bound(lam_.begin(), lam_.end(), x) - lam_.begin();
    if (i == 0) i = 1;
    if (i == lam_.size()) --i;
    --i; // interval [i, i+1]
    real_t h = lam_[i + 1] - lam_[i];
    real_t u0 = (x - lam_[i]) / h;

    // quintic Hermite matching value and two derivatives at both ends
    real_t p0 = a_[i], p1 = a_[i + 1];
    real_t m0 = ap_[i] * h, m1 = ap_[i + 1] * h;
    real_t c0 = app_[i] * h * h, c1 = app_[i + 1] * h * h;
    jet6 u = jet6::variable(u0);
    jet6 u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    jet6 H0 = 1.0Q - 10.0Q * u3 + 15.0Q * u4 - 6.0Q * u5;
    jet6 H1 = u - 6.0Q * u3 + 8.0Q * u4 - 3.0Q * u5;
    jet6 H2 = 0.5Q * u2 - 1.5Q * u3 + 1.5Q * u4 - 0.5Q * u5;
    jet6 H3 = 0.5Q * u3 - u4 + 0.5Q * u5;
    jet6 H4 = -4.0Q * u3 + 7.0Q * u4 - 3.0Q * u5;
    jet6 H5 = 10.0Q * u3 - 15.0Q * u4 + 6.0Q * u5;
    jet6 val = p0 * H0 + m0 * H1 + c0 * H2 + c1 * H3 + m1 * H4 + p1 * H5;

    // rescale from u to lambda: coefficient k picks up h^-k
    jet6 out;
    real_t f = 1.0Q;
    for (int k = 0; k <= jet6::order; ++k) {
        out.coeff(k) = val.coeff(k) / f;
        f *= h;
    }
    return out;
}

std::shared_ptr<const CoefficientProfile> make_profile(const std::string& name) {
    if (name == "l2") return std::make_shared<L2Profile>();
    if (name == "fs") return std::make_shared<FSProfile>();
    return std::make_shared<TabulatedProfile>(TabulatedProfile::from_csv(name));
}

} // namespace lumps

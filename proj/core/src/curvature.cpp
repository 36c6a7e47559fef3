#include "lumps/curvature.hpp"

#include <cmath>
#include <sstream>

#include "lumps/errors.hpp"

namespace lumps {

namespace {

// Abar as a jet so that Bbar gets the exact derivative.  The overall factor
// lambda of numerator and denominator is divided out symbolically, which
// also gives the correct lambda -> 0 limit:
//   Abar = -[2(1+l^2)A'^2 + (4+9l^2) A Q + (1+l^2) A A'' + 4 A^2] / (8 A B),
// with Q = A'/l (coefficient shift at l = 0).
jet6 abar_jet(const CoefficientProfile& profile, real_t lambda) {
    jet6 t = jet6::variable(lambda);
    jet6 a = profile.A(lambda);
    jet6 ap = a.derivative();
    jet6 app = ap.derivative();
    jet6 q = div_by_variable(ap, t);
    jet6 one_l2 = 1.0Q + t * t;
    jet6 num =
        2.0Q * one_l2 * ap * ap + (4.0Q + 9.0Q * t * t) * a * q + one_l2 * a * app +
        4.0Q * a * a;
    jet6 den = 8.0Q * a * profile.B(lambda);
    return -num / den;
}

} // namespace

double hol_e3(const CoefficientProfile& profile, double lambda) {
    if (lambda < 0.0) throw invalid_input("hol_e3: lambda must be >= 0");
    jet6 b = profile.B(lambda);
    real_t B = b.value(), Bp = b.deriv(1), Bpp = b.deriv(2);
    real_t l = lambda, L2 = 1.0Q + l * l;
    return (double)(L2 / (8.0Q * B * B) * ((Bp / B - l / L2) * Bp - Bpp));
}

double hol_e1(const CoefficientProfile& profile, double lambda) {
    if (lambda < 0.0) throw invalid_input("hol_e1: lambda must be >= 0");
    jet6 t = jet6::variable((real_t)lambda);
    jet6 a = profile.A(lambda);
    jet6 ap = a.derivative();
    jet6 q = div_by_variable(ap, t); // A'/lambda
    real_t A = a.value(), Ap = ap.value(), Q = q.value();
    real_t l = lambda, L2 = 1.0Q + l * l;
    real_t fourB = 4.0Q * profile.B(lambda).value();
    // (L2 + l^2) A + l L2 A' is exactly 4B
    real_t t1 = (l * A + 0.5Q * L2 * Ap) / fourB * (l * A / L2 + Ap);
    real_t t2 = (2.0Q + l * l) / L2 * A;
    real_t t3 = 0.5Q * (3.0Q + 2.0Q * l * l) * Q;
    return (double)((t1 - t2 - t3) / (A * A * L2));
}

RicciPair ricci_generators(const CoefficientProfile& profile, double lambda) {
    if (lambda < 0.0) throw invalid_input("ricci_generators: lambda must be >= 0");
    jet6 ab = abar_jet(profile, (real_t)lambda);
    real_t l = lambda;
    real_t bbar =
        (1.0Q + 2.0Q * l * l) * 0.25Q * ab.value() + (l + l * l * l) * 0.25Q * ab.deriv(1);
    return {(double)ab.value(), (double)bbar};
}

double scalar_curvature(const CoefficientProfile& profile, double lambda) {
    RicciPair r = ricci_generators(profile, lambda);
    real_t A = profile.A(lambda).value();
    real_t B = profile.B(lambda).value();
    return (double)(4.0Q * r.Abar / A + 2.0Q * r.Bbar / B);
}

double scalar_curvature_frame_trace(const CoefficientProfile& profile, double lambda) {
    jet6 t = jet6::variable((real_t)lambda);
    jet6 ab = abar_jet(profile, (real_t)lambda);
    jet6 abp = ab.derivative();
    jet6 qb = div_by_variable(abp, t);
    jet6 a = profile.A(lambda);
    jet6 ap = a.derivative();
    jet6 qa = div_by_variable(ap, t);
    real_t l = lambda, L2 = 1.0Q + l * l;
    // X2 = X/(1+l^2) + X'/l for X in {A, Abar}
    real_t A2 = a.value() / L2 + qa.value();
    real_t Ab2 = ab.value() / L2 + qb.value();
    real_t num = ab.value() + l * l * Ab2;
    real_t den = a.value() + l * l * A2;
    return (double)(2.0Q * (2.0Q * ab.value() / a.value() + num / den));
}

CurvatureReport curvature_report(const CoefficientProfile& profile,
                                 const std::vector<double>& grid) {
    CurvatureReport rep;
    rep.profile = profile.name();
    for (double l : grid) {
        rep.lambda.push_back(l);
        rep.A.push_back(profile.A_value(l));
        rep.B.push_back(profile.B_value(l));
        double h1 = hol_e1(profile, l), h3 = hol_e3(profile, l);
        RicciPair r = ricci_generators(profile, l);
        double k = scalar_curvature(profile, l);
        rep.hol_e1.push_back(h1);
        rep.hol_e3.push_back(h3);
        rep.Abar.push_back(r.Abar);
        rep.Bbar.push_back(r.Bbar);
        rep.kappa.push_back(k);
        double lg = l > 1.0 ? std::log(l) : 1.0;
        double l4 = l * l * l * l;
        rep.lam2_Abar.push_back(l * l * r.Abar);
        rep.log2_Bbar.push_back(lg * lg * r.Bbar);
        rep.log3_kappa.push_back(l > 1.0 ? lg * lg * lg * k / l4 : 0.0);
        rep.log3_hol_e3.push_back(l > 1.0 ? lg * lg * lg * h3 / l4 : 0.0);
        if (!std::isfinite(h1) || !std::isfinite(h3) || !std::isfinite(k))
            throw accuracy_error("curvature_report: non-finite entry at lambda=" +
                                 std::to_string(l));
    }
    return rep;
}

std::string CurvatureReport::to_csv() const {
    std::ostringstream os;
    os.precision(16);
    os << "# curvature report\n";
    os << "# profile = " << profile << "\n";
    os << "# derivative_method = " << derivative_method << "\n";
    os << "lambda,A,B,Hol_e1,Hol_e3,Abar,Bbar,kappa,"
          "lam2_Abar,log2_Bbar,log3_kappa_over_l4,log3_hol_e3_over_l4\n";
    for (size_t i = 0; i < lambda.size(); ++i) {
        os << lambda[i] << ',' << A[i] << ',' << B[i] << ',' << hol_e1[i] << ','
           << hol_e3[i] << ',' << Abar[i] << ',' << Bbar[i] << ',' << kappa[i] << ','
           << lam2_Abar[i] << ',' << log2_Bbar[i] << ',' << log3_kappa[i] << ','
           << log3_hol_e3[i] << '\n';
    }
    return os.str();
}

CurvatureScan positivity_scan(const CoefficientProfile& profile,
                              const std::vector<double>& grid) {
    CurvatureScan scan;
    for (double l : grid) {
        RicciPair r = ricci_generators(profile, l);
        if (scan.ricci_positive && !(r.Abar > 0.0 && r.Bbar > 0.0)) {
            scan.ricci_positive = false;
            scan.first_failure_lambda = l;
        }
        if (scan.kappa_positive && !(scalar_curvature(profile, l) > 0.0)) {
            scan.kappa_positive = false;
            if (scan.ricci_positive) scan.first_failure_lambda = l;
        }
    }
    return scan;
}

} // namespace lumps

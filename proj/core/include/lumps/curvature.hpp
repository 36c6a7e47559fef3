#pragma once

#include <string>
#include <vector>

#include "lumps/profiles.hpp"

namespace lumps {

/// Holomorphic sectional curvature of the theta_3 direction of the unitary
/// frame:  (1+l^2)/(8 B^2) { (B'/B - l/(1+l^2)) B' - B'' }.
double hol_e3(const CoefficientProfile& profile, double lambda);

/// Holomorphic sectional curvature of the d/dlambda_1 direction (closed
/// rational expression in A, A', A''; the A'/l quotient is taken as a limit
/// at lambda = 0).
double hol_e1(const CoefficientProfile& profile, double lambda);

/// Ricci generator functions: Abar from the closed rational expression in
/// A, A', A''; Bbar = (1+2l^2) Abar/4 + (l+l^3) Abar'/4 with Abar' by exact
/// jet differentiation.
struct RicciPair {
    double Abar, Bbar;
};
RicciPair ricci_generators(const CoefficientProfile& profile, double lambda);

/// Scalar curvature kappa = 4 Abar/A + 2 Bbar/B.
double scalar_curvature(const CoefficientProfile& profile, double lambda);

/// Same quantity through the unitary-frame trace form
/// 2 [ 2 Abar1/A1 + (Abar1 + l^2 Abar2)/(A1 + l^2 A2) ]; agreement with
/// scalar_curvature is a regression check on the coefficient plumbing.
double scalar_curvature_frame_trace(const CoefficientProfile& profile, double lambda);

/// Pointwise curvature data over a lambda grid plus the slow-limit
/// diagnostics behind the curvature plots.
struct CurvatureReport {
    std::string profile;
    std::string derivative_method = "exact-jet";
    std::vector<double> lambda;
    std::vector<double> A, B;
    std::vector<double> hol_e1, hol_e3;
    std::vector<double> Abar, Bbar, kappa;
    // asymptotic diagnostics
    std::vector<double> lam2_Abar;       // l^2 Abar            -> 4
    std::vector<double> log2_Bbar;       // (log l)^2 Bbar      -> 1/8
    std::vector<double> log3_kappa;      // (log l)^3 kappa/l^4 -> 1/(2 pi)
    std::vector<double> log3_hol_e3;     // (log l)^3 Hol3/l^4  -> 1/(4 pi)

    std::string to_csv() const;
};
CurvatureReport curvature_report(const CoefficientProfile& profile,
                                 const std::vector<double>& grid);

/// Pointwise positivity of Abar, Bbar (the block criterion for Ricci
/// positivity) and of kappa; conjecture support only, never a proof.
struct CurvatureScan {
    bool ricci_positive = true;
    bool kappa_positive = true;
    double first_failure_lambda = 0.0;
    std::string note = "supports Ricci-positivity conjecture; scan, not proof";
};
CurvatureScan positivity_scan(const CoefficientProfile& profile,
                              const std::vector<double>& grid);

} // namespace lumps

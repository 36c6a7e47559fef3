#pragma once

#include <string>
#include <vector>

#include "lumps/profiles.hpp"

namespace lumps {

/// Volume of the rotation factor with respect to the sigma.sigma coframe
/// normalization (d sigma_1 = sigma_2 ^ sigma_3), by Euler-angle quadrature
/// of |det S|; the closed-form value is 8 pi^2.
double so3_volume(int order = 32);

/// Radial volume integral int_0^inf lambda^2 (Lambda/2) B A^2 dlambda,
/// computed in the mu variable with the tail mapped through t = 1/mu.
/// `refine` doubles the base order refine times and requires a Cauchy
/// ratio < 0.5, else accuracy_error; a non-integrable tail raises
/// divergence_error.
double radial_volume_integral(const CoefficientProfile& profile, int order = 64,
                              int refine = 2);

/// Total volume 4 pi * so3_volume() * radial integral.
double total_volume(const CoefficientProfile& profile, int order = 64);

/// Length of the radial curve, int_0^inf sqrt(A1 + lambda^2 A2) dlambda.
double gamma_length(const CoefficientProfile& profile, int order = 64);
/// The same length through the substitution mu(lambda): int_1^inf dmu/mu sqrt(B).
double gamma_length_mu_form(const CoefficientProfile& profile, int order = 64);

/// Numerical diameter of the rotation factor with metric A3(0) sigma.sigma
/// (dense sampling of one-parameter-subgroup distances; the expected value
/// is pi sqrt(A3(0))).
double so3_diameter(const CoefficientProfile& profile, int samples = 4096,
                    unsigned seed = 12345);

/// Upper bound 2 (gamma_length + so3_diameter).
double diameter_upper_bound(const CoefficientProfile& profile);

/// Length of the radial segment between lambda = a and lambda = b.
double radial_segment_length(const CoefficientProfile& profile, double a, double b,
                             int order = 128);

struct GlobalReport {
    std::string profile;
    double so3_vol = 0.0;
    double radial_integral = 0.0;
    double volume = 0.0;
    double gamma_len = 0.0;
    double diameter_bound = 0.0;
    std::string to_json() const;
};
GlobalReport global_report(const CoefficientProfile& profile, int order = 64);

/// Fibre-collapse diagnostic: ||theta_3||^2 = B against pi log(lambda) /
/// (2 lambda^4), plus the norms of the non-collapsing frame directions.
struct FibreCollapseRow {
    double lambda;
    double B;
    double asymptote; // pi log(lambda) / (2 lambda^4)
    double ratio;
    double norm2_theta1;      // A3
    double norm2_lam_dlam1;   // lambda^2 A1
};
std::vector<FibreCollapseRow> fibre_collapse_diagnostic(const CoefficientProfile& profile,
                                                        const std::vector<double>& grid);
std::string fibre_collapse_csv(const std::vector<FibreCollapseRow>& rows);

} // namespace lumps

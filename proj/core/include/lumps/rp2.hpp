#pragma once

#include <string>
#include <vector>

#include "lumps/profiles.hpp"
#include "lumps/quadrature.hpp"
#include "lumps/rational_map.hpp"

namespace lumps {

/// Chart of the fixed set of the antipodal involution in odd degree n:
/// poles w_1..w_n plus the phase of the overall factor.  Zeros are the
/// antipodes -1/conj(w_i) and |mu| = |w_1 ... w_n|.
struct FixedSetChart {
    int n = 1;
    std::vector<cplx> poles;
    double arg_mu = 0.0;
};

/// Build the equivariant rational map of a chart.  Throws invalid_input for
/// even n (the fixed set is empty) and degeneracy_error when a pole collides
/// with a zero (w_i ~ -1/conj(w_j)).
RationalMap build_fixed_map(const FixedSetChart& chart);

/// The collapse curve W_rho(z) = rho z^{n-2} (z+1)(z - 1/rho) /
/// ((z-1)(z+rho)) for odd n >= 3 and rho in [1/2, 1).
RationalMap w_rho(int n, double rho);

/// Induced metric coefficient f(rho) on the collapse curve:
/// 2 int dxdy (1+|z|^2)^-2 (1+|W_rho|^2)^-2 |dW_rho/drho|^2.
/// The quadrature works in a chart rotated so the singular candidates
/// z = +-1 sit at the chart centers, with geometrically graded radial panels
/// refined down to the scale (1-rho).  Throws accuracy_error (with a
/// refinement hint) if two refinement levels disagree beyond rel_tol.
double f_rho(int n, double rho, int theta_order = 64, int radial_order = 16,
             bool check = true, double rel_tol = 1e-6);

/// Length of the collapse curve up to rho_max: int_{1/2}^{rho_max} sqrt(f) drho.
double w_rho_partial_length(int n, double rho_max, int points = 48);

/// Partial lengths toward the boundary at rho_max = 1 - 10^-k, with a
/// convergence verdict (Cauchy differences shrinking by at least ratio 0.5).
struct IncompletenessResult {
    int n = 3;
    std::vector<double> rho_max;
    std::vector<double> length;
    bool converged = false;
    double extrapolated = 0.0;
};
IncompletenessResult incompleteness_length(int n, int k_min = 2, int k_max = 6);

/// Residuals of the n = 1 structure of the fixed set: unitarity of sampled
/// fixed maps, the bi-invariant induced metric, and energy-density
/// uniformity.
struct N1FixedReport {
    double max_unitarity_residual = 0.0;
    double max_gram_residual = 0.0;      // Gram(theta_a, theta_b) vs A3(0) delta_ab
    double max_density_variance = 0.0;
    bool ok = false;
};
N1FixedReport n1_fixed_is_unitary(int samples, unsigned seed,
                                  const CoefficientProfile& profile,
                                  const SphereQuadrature& quad);

std::string f_rho_table_csv(int n, const std::vector<double>& rho);

} // namespace lumps

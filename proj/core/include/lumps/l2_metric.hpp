#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>

#include "lumps/moebius.hpp"
#include "lumps/quadrature.hpp"
#include "lumps/rational_map.hpp"

namespace lumps {

// Measure convention: the metric integrals are taken with dz dzbar = 2 dxdy,
// which calibrates the kinetic-energy normalization so that the axis family
// gives gamma(d/dlambda_1, d/dlambda_1)|_{lambda=0} = 4 pi / 3 and holomorphic
// maps have energy 2 pi n.  The constant is echoed in output metadata.
inline constexpr double kMeasureCalibration = 2.0;

/// Harmonic map energy E = (1/2) int |dphi|^2 of a rational (holomorphic)
/// map; equals 2 pi n in exact arithmetic.  When `check` is set the result is
/// recomputed at a higher order and an accuracy_error is thrown if the two
/// disagree by more than check_tol.
double energy(const RationalMap& map, const SphereQuadrature& quad,
              bool check = true, double check_tol = 1e-8);

/// Hermitian matrix of the kinetic-energy metric in the inhomogeneous chart
/// b_alpha = a_alpha / a_{2n+2} (denominator made monic).
struct MetricMatrix {
    Eigen::MatrixXcd gamma;       // (2n+1) x (2n+1), Hermitian by construction
    Eigen::VectorXcd b;           // chart coordinates of the base map
    int degree = 0;
    int quadrature_order = 0;

    double hermiticity_residual() const;
    double smallest_eigenvalue() const;
    std::string to_json() const;
};

/// gamma_{alpha beta} = 2 int dxdy (1+|z|^2)^-2 (1+|W|^2)^-2
///                        (dW/db_alpha)(conj dW/db_beta),
/// with the integrand derivatives evaluated analytically.  Requires the
/// denominator leading coefficient to be usable (rotate the target first if
/// needed); throws degeneracy_error when the base map is too close to the
/// degeneracy set.
MetricMatrix l2_metric_matrix(const RationalMap& map, const SphereQuadrature& quad);

/// Max over index triples of the two holomorphy defects
/// |d gamma_ab / d b_delta - d gamma_db / d b_alpha| (and the conjugate
/// analogue), partials by central differences of step `step`.
double kaehler_symmetry_residual(const RationalMap& map, double step,
                                 const SphereQuadrature& quad);

/// A tangent vector to the moduli space along a matrix curve M(t): the
/// variation field z -> Wdot(z).  Supports stable evaluation on both charts.
struct MoebiusVariation {
    Matrix2c M;    // base point
    Matrix2c Mdot; // curve velocity

    cplx value(const cplx& z) const;          // Wdot(z), |z| <= 1
    cplx value_inverted(const cplx& w) const; // Wdot(1/w) evaluated stably
};

/// Hermitian L^2 pairing 2 int dxdy (1+|z|^2)^-2 (1+|W|^2)^-2 X conj(Y)
/// of two variation fields based at the same degree-1 map.
cplx l2_inner(const MoebiusVariation& X, const MoebiusVariation& Y,
              const SphereQuadrature& quad);

/// The six tangent vectors (d/dlambda_1, d/dlambda_2, d/dlambda_3, theta_1,
/// theta_2, theta_3) at W_lambda as matrix curves through w_lambda_matrix.
std::array<MoebiusVariation, 6> frame_variations_at_w_lambda(double lambda);

/// Components of the same six tangent vectors in the complex chart
/// (b1, b2, b3) = (a12, a21, a22)/a11 used to express the complex structure.
std::array<Eigen::Vector3cd, 6> frame_tangents_at_w_lambda(double lambda);

/// gamma(X, X) for a matrix-curve tangent at a degree-1 base map, computed
/// through l2_metric_matrix in a chart reached by the fixed target rotation
/// W -> 1/W (so the axis maps W_lambda, whose denominator is degenerate in
/// the raw chart, are usable).  Returns the real quadratic form value.
double metric_norm2_deg1(const Matrix2c& M, const Matrix2c& Mdot,
                         const SphereQuadrature& quad);

/// Energy density |W'|^2 (1+|z|^2)^2 / (1+|W|^2)^2 at a finite point.
double energy_density(const RationalMap& map, const cplx& z);

} // namespace lumps

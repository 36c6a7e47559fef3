#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "lumps/profiles.hpp"

namespace lumps {

using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// The five coefficient functions of an invariant symmetric tensor
///   A1 dl.dl + A2 (l.dl)^2 + A3 s.s + A4 (l.s)^2 + A5 l.(s x dl),
/// all determined by the generator A:
///   A1 = A5 = A,  A2 = A/(1+l^2) + A'/l,  A3 = (1+2l^2)A/4,
///   A4 = (1+l^2)A'/(4l),
/// with the l -> 0 quotients taken as limits.  Throws invalid_input when the
/// profile violates A'(0) = 0 (the quotients would be singular).
struct InvariantCoefficients {
    double lambda;
    double A1, A2, A3, A4, A5;
    double B; // A3 + lambda^2 A4
};
InvariantCoefficients coefficients_from_A(const CoefficientProfile& profile, double lambda);

/// Everything about the invariant geometry at an axis point W_lambda in the
/// moving frame (d/dlambda_1..3, theta_1..3): metric Gram matrix, complex
/// structure J, Kahler 2-form matrix, and the 2-form coefficients.
struct FrameGeometry {
    double lambda;
    Matrix6 gram;     // symmetric, positive definite for admissible profiles
    Matrix6 J;        // J^2 = -I
    Matrix6 omega;    // omega(x, y) = gram(J x, y), antisymmetric
    double Ahat1, Ahat2, Ahat3, Ahat4;
    double B;         // gram(theta_3, theta_3)
};
FrameGeometry frame_geometry(const CoefficientProfile& profile, double lambda);

/// Gram matrix of the invariant tensor in the (dlambda, sigma) frame at a
/// general shape vector (the frame coefficients do not depend on the
/// rotation factor).
Matrix6 invariant_gram(const CoefficientProfile& profile, const Eigen::Vector3d& lambda_vec);
Matrix6 invariant_gram(const InvariantCoefficients& c, const Eigen::Vector3d& lambda_vec);

/// Kahler 2-form matrix in the same frame at a general shape vector.
Matrix6 invariant_omega(const CoefficientProfile& profile, const Eigen::Vector3d& lambda_vec);

/// Complex structure of Eq.-type (valid on tangent spaces along the axis
/// family only).
Matrix6 complex_structure(double lambda);

/// Max deviation in the two Hermiticity identities
///   A3 = A1/4 + l^2 A5/2,   A1 + l^2 A2 = 4 (A3 + l^2 A4)/(1+l^2),
/// over the grid.  The coefficient supplier is a hook so tests can inject
/// perturbed coefficient sets.
double verify_hermiticity(const CoefficientProfile& profile, const std::vector<double>& grid);
double verify_hermiticity(const std::function<InvariantCoefficients(double)>& coeffs,
                          const std::vector<double>& grid);

/// Max residual of the closure identities Ahat1 = Ahat3, Ahat1' = l Ahat2,
/// Ahat4 = 0 over the grid (derivative by 5-point central difference).
double verify_closure(const CoefficientProfile& profile, const std::vector<double>& grid);

/// Pointwise positivity of the tensor: A > 0, A'/A > -(1+2l^2)/(l+l^3), and
/// for l > 1 the integrated decay bound A(l) > sqrt(2) A(1)/(l sqrt(1+l^2)).
struct PositivityReport {
    bool ok = true;
    double first_failure_lambda = 0.0;
    std::string failed_constraint;
};
PositivityReport positivity_check(const CoefficientProfile& profile,
                                  const std::vector<double>& grid);

/// Coefficients of the trivial representation in the symmetric/antisymmetric
/// squares of the isotropy action, computed by numerically integrating the
/// characters 7+8cos+6cos2 and 5+8cos+2cos2 against the circle and SO(3)
/// class measures.  Exact values (7, 5, 3, 1).
std::array<double, 4> character_integrals(int order = 256);

/// Helper: log- or linearly spaced grids.
std::vector<double> linear_grid(double a, double b, int count);
std::vector<double> log_grid(double a, double b, int count);

} // namespace lumps

#pragma once

#include <Eigen/Dense>
#include <array>

#include "lumps/rational_map.hpp"

namespace lumps {

using Matrix2c = Eigen::Matrix2cd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Pauli matrices tau_1, tau_2, tau_3.
const std::array<Matrix2c, 3>& pauli();

/// exp(i angle (axis . tau) / 2) for a unit axis; SU(2).
Matrix2c su2_exp(const Vector3& axis, double angle);

/// SO(3) matrix of the projective unitary class, R_ab = tr(tau_a U^dag tau_b U)/2.
Matrix3 so3_of(const Matrix2c& U);

/// A degree-1 map as a projective matrix class: W = (M00 z + M01)/(M10 z + M11).
Matrix2c moebius_matrix(const RationalMap& map);
RationalMap moebius_map(const Matrix2c& M);

/// Unique polar split [M] = [U](Lambda I + lambda . tau) of an invertible
/// projective class: rotation part [U] in PU(2) and shape vector lambda,
/// Lambda = sqrt(1 + |lambda|^2).  The stored U is the deterministic SU(2)
/// representative (first nonzero of Re/Im of its entries made positive).
struct MoebiusPolar {
    Matrix2c U;
    Vector3 lambda_vec;

    double lambda() const { return lambda_vec.norm(); }
    double Lambda() const { return std::sqrt(1.0 + lambda_vec.squaredNorm()); }
    double mu() const {
        double l = lambda();
        return (std::sqrt(1.0 + l * l) + l) * (std::sqrt(1.0 + l * l) + l);
    }
    /// Shape factor Lambda I + lambda . tau (positive Hermitian, det 1).
    Matrix2c shape() const;
    /// [U] * shape, reproducing the original projective class.
    Matrix2c reconstruct() const;
};

/// Polar-decompose an invertible matrix class.  Throws invalid_input when
/// |det M| is negligible against the matrix scale.
MoebiusPolar polar_decompose(const Matrix2c& M);

/// Isometry action ([L],[R]) : ([U], lambda) -> ([LUR], R lambda) with
/// R in SO(3) the rotation of [R].  |lambda| is preserved.
MoebiusPolar g0_act(const Matrix2c& L, const Matrix2c& R, const MoebiusPolar& p);

/// Apply ([L],[R]) to a degree-1 map directly: [M] -> [L M R].
RationalMap g0_act(const Matrix2c& L, const Matrix2c& R, const RationalMap& map);

/// The axis map W_lambda : z -> mu(lambda) z as a matrix, diag(Lambda+lambda,
/// Lambda-lambda).
Matrix2c w_lambda_matrix(double lambda);

/// Deterministic SU(2) representative of the projective class (det-normalized,
/// overall sign fixed).
Matrix2c projective_normalize(const Matrix2c& M);

} // namespace lumps

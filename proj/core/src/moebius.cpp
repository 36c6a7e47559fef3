#include "lumps/moebius.hpp"

#include <cmath>

#include "lumps/errors.hpp"

namespace lumps {

const std::array<Matrix2c, 3>& pauli() {
    static const std::array<Matrix2c, 3> tau = [] {
        std::array<Matrix2c, 3> t;
        const cplx i(0.0, 1.0);
        t[0] << 0, 1, 1, 0;
        t[1] << 0, -i, i, 0;
        t[2] << 1, 0, 0, -1;
        return t;
    }();
    return tau;
}

Matrix2c su2_exp(const Vector3& axis, double angle) {
    Vector3 n = axis;
    double len = n.norm();
    if (len == 0.0) return Matrix2c::Identity();
    n /= len;
    Matrix2c ntau = Matrix2c::Zero();
    for (int a = 0; a < 3; ++a) ntau += n[a] * pauli()[a];
    const cplx i(0.0, 1.0);
    return std::cos(angle / 2) * Matrix2c::Identity() + i * std::sin(angle / 2) * ntau;
}

Matrix3 so3_of(const Matrix2c& U) {
    Matrix3 R;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            R(a, b) = 0.5 * (pauli()[a] * U.adjoint() * pauli()[b] * U).trace().real();
    return R;
}

Matrix2c moebius_matrix(const RationalMap& map) {
    if (map.degree() != 1) throw invalid_input("moebius_matrix: degree-1 map required");
    Matrix2c M;
    // W = (a2 z + a1)/(a4 z + a3)
    M << map.numerator()[1], map.numerator()[0], map.denominator()[1], map.denominator()[0];
    return M;
}

RationalMap moebius_map(const Matrix2c& M) {
    return RationalMap(1, {M(0, 1), M(0, 0)}, {M(1, 1), M(1, 0)});
}

Matrix2c projective_normalize(const Matrix2c& M) {
    cplx det = M.determinant();
    double scale = M.cwiseAbs().maxCoeff();
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw invalid_input("projective_normalize: singular matrix class");
    Matrix2c N = M / std::sqrt(det);
    // fix the +-N ambiguity: first entry (row-major, Re before Im) that is
    // clearly nonzero is made positive
    double s = N.cwiseAbs().maxCoeff();
    const double eps = 1e-12 * s;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            for (double part : {N(r, c).real(), N(r, c).imag()}) {
                if (std::abs(part) > eps) return part > 0 ? Matrix2c(N) : Matrix2c(-N);
            }
        }
    return N;
}

Matrix2c MoebiusPolar::shape() const {
    Matrix2c P = Lambda() * Matrix2c::Identity();
    for (int a = 0; a < 3; ++a) P += lambda_vec[a] * pauli()[a];
    return P;
}

Matrix2c MoebiusPolar::reconstruct() const { return U * shape(); }

MoebiusPolar polar_decompose(const Matrix2c& M) {
    Matrix2c N = projective_normalize(M); // det = 1
    // positive square root of N^dag N via the self-adjoint eigensolver
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(N.adjoint() * N);
    if (es.info() != Eigen::Success)
        throw invalid_input("polar_decompose: eigensolver failed");
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
    Matrix2c P = es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
                 es.eigenvectors().adjoint();
    // det P = 1 up to rounding; lambda_a = tr(tau_a P)/2 are real
    MoebiusPolar out;
    for (int a = 0; a < 3; ++a)
        out.lambda_vec[a] = 0.5 * (pauli()[a] * P).trace().real();
    // rebuild the shape factor from lambda so Lambda^2 - lambda^2 = 1 exactly
    Matrix2c S = out.shape();
    out.U = projective_normalize(N * S.inverse());
    return out;
}

MoebiusPolar g0_act(const Matrix2c& L, const Matrix2c& R, const MoebiusPolar& p) {
    Matrix2c Ln = projective_normalize(L), Rn = projective_normalize(R);
    MoebiusPolar out;
    out.U = projective_normalize(Ln * p.U * Rn);
    out.lambda_vec = so3_of(Rn) * p.lambda_vec;
    return out;
}

RationalMap g0_act(const Matrix2c& L, const Matrix2c& R, const RationalMap& map) {
    return moebius_map(projective_normalize(L) * moebius_matrix(map) *
                       projective_normalize(R));
}

Matrix2c w_lambda_matrix(double lambda) {
    double Lam = std::sqrt(1.0 + lambda * lambda);
    Matrix2c M;
    M << Lam + lambda, 0, 0, Lam - lambda;
    return M;
}

} // namespace lumps

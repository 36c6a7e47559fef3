#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lumps/sphere.hpp"

namespace lumps {

/// Degree-n rational map W(z) = (a_1 + a_2 z + ... + a_{n+1} z^n) /
/// (a_{n+2} + ... + a_{2n+2} z^n), the configuration-space point of the
/// moduli space.  Coefficients are stored in ascending powers; the map is a
/// projective equivalence class (scaling all 2n+2 coefficients by nonzero
/// xi gives the same map).
class RationalMap {
public:
    RationalMap(int degree, std::vector<cplx> numerator, std::vector<cplx> denominator);

    static RationalMap identity();                       // z -> z
    static RationalMap power(int n);                     // z -> z^n
    static RationalMap dilation(double mu);              // z -> mu z

    int degree() const { return n_; }
    const std::vector<cplx>& numerator() const { return num_; }
    const std::vector<cplx>& denominator() const { return den_; }

    /// Total evaluation on the sphere: poles map to infinity, z = infinity is
    /// handled by the degree-aware leading-coefficient ratio.
    ExtendedComplex operator()(const ExtendedComplex& z) const;

    /// W'(z) at a finite non-pole point (used by energy quadrature).
    cplx derivative(const cplx& z) const;

    /// The map w -> W(1/w) with coefficient vectors reversed; evaluating it
    /// near w = 0 is the numerically stable way to work near z = infinity.
    RationalMap inverted_chart() const;

    /// Scale all coefficients by xi != 0 (same projective class).
    RationalMap scaled(const cplx& xi) const;

    /// max |coefficient|, used for scale normalization.
    double max_coefficient() const;

    std::string to_json() const;
    static RationalMap from_json(const std::string& text);

private:
    int n_;
    std::vector<cplx> num_, den_; // each of size n_+1, index k = z^k coefficient
};

/// Resultant-based degree validity: true iff the numerator and denominator
/// (scale-normalized to unit max modulus) have |resultant| > tol and the two
/// leading coefficients are not both below tol.  Throws invalid_input on a
/// zero coefficient vector.
bool is_valid_degree(const RationalMap& map, double tol = 1e-10);

/// |resultant| of numerator and denominator after normalizing the
/// coefficient vector to unit max modulus.
double normalized_resultant(const RationalMap& map);

/// Max chordal distance between the two maps over a default sphere grid;
/// the canonical (projective-scale-free) equality measure.
double map_distance(const RationalMap& a, const RationalMap& b, int grid = 200);

/// Antiholomorphic involution W -> p o W o p with p : z -> -1/conj(z),
/// acting on coefficients with alternating signs and reversal.
RationalMap antipodal_involution(const RationalMap& map);

/// Max over the grid of the chordal distance between W(-1/conj(z)) and
/// p(W(z)); below tol certifies (at sample resolution) that the map projects
/// to a well-defined map of the projective plane.
double rp2_equivariance_residual(const RationalMap& map,
                                 const std::vector<ExtendedComplex>& grid);
double rp2_equivariance_residual(const RationalMap& map, int grid_size = 200);

} // namespace lumps

#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace lumps {

using cplx = std::complex<double>;

/// A point on the Riemann sphere: a finite stereographic coordinate or the
/// point at infinity.  Arithmetic conventions: 1/0 = inf, 1/inf = 0.
struct ExtendedComplex {
    cplx v{0.0, 0.0};
    bool infinite = false;

    ExtendedComplex() = default;
    ExtendedComplex(cplx z) : v(z) {}
    ExtendedComplex(double x) : v(x) {}

    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.infinite = true;
        return e;
    }
    bool is_inf() const { return infinite; }
};

inline ExtendedComplex reciprocal(const ExtendedComplex& z) {
    if (z.is_inf()) return ExtendedComplex(cplx(0.0));
    if (z.v == cplx(0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex(1.0 / z.v);
}

/// Antipodal map p : z -> -1/conj(z).
inline ExtendedComplex antipode(const ExtendedComplex& z) {
    if (z.is_inf()) return ExtendedComplex(cplx(0.0));
    if (z.v == cplx(0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex(-1.0 / std::conj(z.v));
}

/// Chordal (Fubini-Study) distance on the unit sphere, well defined at inf.
/// Range [0, 2]; d(z, antipode(z)) = 2.
inline double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_inf() && b.is_inf()) return 0.0;
    if (a.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(b.v));
    if (b.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(a.v));
    return 2.0 * std::abs(a.v - b.v) /
           std::sqrt((1.0 + std::norm(a.v)) * (1.0 + std::norm(b.v)));
}

/// Roughly uniform sample of the sphere in stereographic coordinates
/// (Fibonacci lattice mapped through the inverse projection).
inline std::vector<ExtendedComplex> sphere_grid(int count) {
    std::vector<ExtendedComplex> pts;
    pts.reserve(count);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < count; ++i) {
        double ct = 1.0 - 2.0 * (i + 0.5) / count; // cos(theta)
        double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        double phi = 2.0 * M_PI * std::fmod(i / golden, 1.0);
        // stereographic projection from the north pole: z = cot(theta/2) e^{i phi}
        if (ct > 1.0 - 1e-14) {
            pts.push_back(ExtendedComplex::infinity());
        } else {
            double r = st / (1.0 - ct);
            pts.push_back(ExtendedComplex(std::polar(r, phi)));
        }
    }
    return pts;
}

} // namespace lumps

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "lumps/sphere.hpp"

namespace lumps {

/// Nodes and weights of an n-point Gauss-Legendre rule on [a, b].
struct GaussLegendre {
    std::vector<double> x, w;
};
GaussLegendre gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Tensor-product Gauss-Legendre rule in polar coordinates on the unit disk,
/// mirrored through z -> 1/z to cover the whole sphere without truncation.
/// integrate(f) returns  int_C f(z) dxdy  for integrands decaying like
/// |z|^-4 (every L^2-metric integrand here does).
class SphereQuadrature {
public:
    explicit SphereQuadrature(int order);

    int order() const { return order_; }
    size_t node_count() const { return z_.size(); } // per chart

    /// Default order: LUMPS_QUAD_ORDER environment variable, else 64.
    static int default_order();
    static SphereQuadrature with_default_order() { return SphereQuadrature(default_order()); }

    template <typename F>
    double integrate(F&& f) const {
        // fixed summation order (deterministic result for a fixed node set)
        long double acc = 0.0L;
        for (size_t i = 0; i < z_.size(); ++i) {
            acc += (long double)(w_[i] * f(z_[i]));
            acc += (long double)(w_inv_[i] * f(1.0 / z_[i]));
        }
        return (double)acc;
    }

    template <typename F>
    cplx integrate_c(F&& f) const {
        std::complex<long double> acc = 0.0L;
        for (size_t i = 0; i < z_.size(); ++i) {
            acc += (std::complex<long double>)(w_[i] * f(z_[i]));
            acc += (std::complex<long double>)(w_inv_[i] * f(1.0 / z_[i]));
        }
        return cplx((double)acc.real(), (double)acc.imag());
    }

    /// Chart nodes (|z| <= 1) and weights; the mirrored chart uses nodes 1/z
    /// with weights weight/|z|^4.
    const std::vector<cplx>& nodes() const { return z_; }
    const std::vector<double>& weights() const { return w_; }

private:
    int order_;
    std::vector<cplx> z_;
    std::vector<double> w_;     // includes the polar-jacobian factor r
    std::vector<double> w_inv_; // w / |z|^4 for the mirrored chart
};

} // namespace lumps

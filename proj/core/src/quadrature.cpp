#include "lumps/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "lumps/errors.hpp"

namespace lumps {

GaussLegendre gauss_legendre(int n, double a, double b) {
    if (n < 1) throw invalid_input("gauss_legendre: order must be >= 1");
    GaussLegendre g;
    g.x.resize(n);
    g.w.resize(n);
    // Newton iteration on P_n from Chebyshev initial guesses
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p1 = x; }
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            double pm = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        g.x[i] = x;
        g.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    // map [-1,1] -> [a,b]
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        g.x[i] = mid + half * g.x[i];
        g.w[i] *= half;
    }
    return g;
}

int SphereQuadrature::default_order() {
    if (const char* env = std::getenv("LUMPS_QUAD_ORDER")) {
        int v = std::atoi(env);
        if (v >= 4) return v;
    }
    return 64;
}

SphereQuadrature::SphereQuadrature(int order) : order_(order) {
    if (order < 4) throw invalid_input("SphereQuadrature: order must be >= 4");
    GaussLegendre radial = gauss_legendre(order, 0.0, 1.0);
    GaussLegendre angular = gauss_legendre(order, 0.0, 2.0 * M_PI);
    z_.reserve(size_t(order) * order);
    w_.reserve(size_t(order) * order);
    w_inv_.reserve(size_t(order) * order);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            double r = radial.x[i];
            z_.push_back(std::polar(r, angular.x[j]));
            double w = radial.w[i] * angular.w[j] * r;
            w_.push_back(w);
            w_inv_.push_back(w / (r * r * r * r));
        }
    }
}

} // namespace lumps

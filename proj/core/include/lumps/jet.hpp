#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "lumps/errors.hpp"
#include "lumps/real.hpp"

namespace lumps {

/// Truncated Taylor series (value plus Order derivatives) with arithmetic.
/// Coefficients are Taylor coefficients about the expansion point, so
/// deriv(k) = k! * coefficient k.  Used to evaluate closed-form coefficient
/// functions together with their exact derivatives in one pass.
template <typename T, int Order>
class Jet {
public:
    static constexpr int order = Order;
    static constexpr int size = Order + 1;

    Jet() { c_.fill(T(0)); }
    explicit Jet(T v) : Jet() { c_[0] = v; }

    static Jet constant(T v) { return Jet(v); }
    static Jet variable(T v) {
        Jet j(v);
        if constexpr (Order >= 1) j.c_[1] = T(1);
        return j;
    }

    T value() const { return c_[0]; }
    T coeff(int k) const { return c_[k]; }
    T& coeff(int k) { return c_[k]; }

    T deriv(int k) const {
        T f = T(1);
        for (int i = 2; i <= k; ++i) f *= T(i);
        return c_[k] * f;
    }

    /// Jet of the derivative f'; the top coefficient is lost.
    Jet derivative() const {
        Jet r;
        for (int k = 0; k < Order; ++k) r.c_[k] = T(k + 1) * c_[k + 1];
        return r;
    }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k < size; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < size; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < size; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < size; ++k) {
            T s = T(0);
            for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
            r.c_[k] = s;
        }
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet q;
        for (int k = 0; k < size; ++k) {
            T s = a.c_[k];
            for (int j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
            q.c_[k] = s / b.c_[0];
        }
        return q;
    }

    friend Jet operator+(const Jet& a, T s) { Jet r = a; r.c_[0] += s; return r; }
    friend Jet operator+(T s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, T s) { Jet r = a; r.c_[0] -= s; return r; }
    friend Jet operator-(T s, const Jet& a) { return (-a) + s; }
    friend Jet operator*(const Jet& a, T s) {
        Jet r;
        for (int k = 0; k < size; ++k) r.c_[k] = a.c_[k] * s;
        return r;
    }
    friend Jet operator*(T s, const Jet& a) { return a * s; }
    friend Jet operator/(const Jet& a, T s) { return a * (T(1) / s); }
    friend Jet operator/(T s, const Jet& a) { return Jet::constant(s) / a; }

    friend Jet sqrt(const Jet& a) {
        Jet r;
        r.c_[0] = scalar_sqrt(a.c_[0]);
        for (int k = 1; k < size; ++k) {
            T s = a.c_[k];
            for (int j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
            r.c_[k] = s / (T(2) * r.c_[0]);
        }
        return r;
    }

    friend Jet log(const Jet& a) {
        // log(a) = log(a0) + log(u), u = a/a0 with u0 = 1
        Jet r;
        r.c_[0] = scalar_log(a.c_[0]);
        for (int k = 1; k < size; ++k) {
            T s = a.c_[k] / a.c_[0];
            for (int j = 1; j < k; ++j) s -= T(j) / T(k) * r.c_[j] * (a.c_[k - j] / a.c_[0]);
            r.c_[k] = s;
        }
        return r;
    }

    friend Jet exp(const Jet& a) {
        Jet r;
        r.c_[0] = scalar_exp(a.c_[0]);
        for (int k = 1; k < size; ++k) {
            T s = T(0);
            for (int j = 1; j <= k; ++j) s += T(j) * a.c_[j] * r.c_[k - j];
            r.c_[k] = s / T(k);
        }
        return r;
    }

    friend Jet pow(const Jet& a, int n) {
        if (n < 0) return T(1) / pow(a, -n);
        Jet r = Jet::constant(T(1));
        Jet base = a;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// a / (expansion variable), where `var` is the variable jet this
    /// expansion was built from.  At an expansion point > 0 this is plain
    /// division; at 0 it is the coefficient shift, requiring a(0) ~= 0
    /// (the L'Hopital branch for quotients like A'(lambda)/lambda).
    friend Jet div_by_variable(const Jet& a, const Jet& var, T zero_tol = T(1e-12)) {
        if (var.c_[0] != T(0)) return a / var;
        T scale = T(0);
        for (int k = 0; k < size; ++k) scale = std::max(scale, scalar_abs(a.c_[k]));
        if (scalar_abs(a.c_[0]) > zero_tol * std::max(scale, T(1)))
            throw invalid_input("div_by_variable: numerator does not vanish at 0");
        Jet r;
        for (int k = 0; k < Order; ++k) r.c_[k] = a.c_[k + 1];
        return r;
    }

private:
    std::array<T, size> c_;
};

using jet6 = Jet<real_t, 6>;

} // namespace lumps

#pragma once

#include <cmath>
#include <quadmath.h>

namespace lumps {

// Scalar type of the closed-form coefficient/curvature pipeline.  The Ricci
// generator is a ~15-digit cancellation at lambda ~ 1e4 (worse further out),
// so the jets run in quad precision; quadrature code stays in double.
using real_t = __float128;

inline real_t scalar_sqrt(real_t x) { return sqrtq(x); }
inline real_t scalar_log(real_t x) { return logq(x); }
inline real_t scalar_exp(real_t x) { return expq(x); }
inline real_t scalar_abs(real_t x) { return fabsq(x); }

inline double scalar_sqrt(double x) { return std::sqrt(x); }
inline double scalar_log(double x) { return std::log(x); }
inline double scalar_exp(double x) { return std::exp(x); }
inline double scalar_abs(double x) { return std::abs(x); }

inline long double scalar_sqrt(long double x) { return std::sqrt(x); }
inline long double scalar_log(long double x) { return std::log(x); }
inline long double scalar_exp(long double x) { return std::exp(x); }
inline long double scalar_abs(long double x) { return std::abs(x); }

inline constexpr real_t kPi = 3.14159265358979323846264338327950288419716939937510582Q;

} // namespace lumps

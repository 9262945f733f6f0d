#pragma once

#include <cmath>

// Cancellation-free building blocks shared by the planning modules.

namespace relspeed::detail {

// cosh(x) - 1 without the subtraction, exact through x -> 0.
inline double cosh_minus_one(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

// sqrt(1 + s^2) - 1 without the subtraction; hypot keeps huge s finite.
inline double sqrt1pss_minus_one(double s) {
  return s * s / (1.0 + std::hypot(1.0, s));
}

// x^p with the correctly rounded routes at the exponents the exact-equality
// checks depend on; glibc pow is faithful but not correctly rounded.
inline double power(double x, double p) {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return x;
  if (p == 0.5) return std::sqrt(x);
  return std::pow(x, p);
}

}  // namespace relspeed::detail

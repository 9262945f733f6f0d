#pragma once

#include <cmath>
#include <limits>

#include "relspeed/errors.hpp"

namespace relspeed::detail {

// Root of a strictly decreasing function on (0, inf), grown outward from a
// positive seed: the bracket doubles upward while the residual stays
// positive, or halves downward while it stays negative, at most max_growth
// steps either way before infeasibility_error. The bracketed root is then
// narrowed by Illinois false position with a midpoint guard, so convergence
// is superlinear but never worse than bisection.
template <class Fn>
double solve_decreasing(Fn&& residual, double seed, int max_growth = 60) {
  if (!(seed > 0.0) || !std::isfinite(seed))
    throw domain_error("root seed must be positive and finite");

  double lo = seed;
  double f_lo = residual(lo);
  if (f_lo == 0.0) return lo;

  double hi, f_hi;
  if (f_lo > 0.0) {  // root lies above the seed
    hi = 2.0 * lo;
    f_hi = residual(hi);
    for (int i = 0; f_hi > 0.0; ++i) {
      if (i >= max_growth)
        throw infeasibility_error(
            "root bracket: no sign change within the growth limit");
      lo = hi;
      f_lo = f_hi;
      hi *= 2.0;
      f_hi = residual(hi);
    }
  } else {  // root lies below the seed
    hi = lo;
    f_hi = f_lo;
    lo = 0.5 * hi;
    f_lo = residual(lo);
    for (int i = 0; f_lo < 0.0; ++i) {
      if (i >= max_growth)
        throw infeasibility_error(
            "root bracket: no sign change within the growth limit");
      hi = lo;
      f_hi = f_lo;
      lo *= 0.5;
      f_lo = residual(lo);
    }
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;

  // Invariant: f_lo > 0 > f_hi on [lo, hi].
  constexpr double eps = std::numeric_limits<double>::epsilon();
  int kept = 0;  // endpoint retained on the previous iteration
  for (int it = 0; it < 200 && (hi - lo) > 2.0 * eps * hi; ++it) {
    double mid = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
      if (kept == -1) f_hi *= 0.5;  // hi stagnant twice: deweight it
      kept = -1;
    } else {
      hi = mid;
      f_hi = f_mid;
      if (kept == +1) f_lo *= 0.5;
      kept = +1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace relspeed::detail

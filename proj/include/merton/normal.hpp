#pragma once

#include <cmath>

namespace merton {

inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

/// Standard normal CDF via the complementary error function; absolute error
/// well below 1e-15 over the whole line, including far tails.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

/// Upper tail 1 - Phi(x), accurate for large positive x where normal_cdf
/// rounds to 1.
inline double normal_tail(double x) {
  return 0.5 * std::erfc(x * 0.7071067811865475244);
}

/// Inverse of normal_cdf (Wichura's PPND16 rational approximations),
/// relative accuracy about 1e-15 for p in (0, 1) down to denormal range.
double normal_inverse_cdf(double p);

}  // namespace merton

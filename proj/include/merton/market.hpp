#pragma once

#include <vector>

#include "merton/errors.hpp"

namespace merton {

/// Time grid: horizon split into equal steps of size step() = horizon/steps.
struct Discretization {
  double horizon;  // years, > 0
  int steps;       // >= 1

  double step() const { return horizon / steps; }

  static Discretization of(double horizon, int steps);
};

/// Per-step drift/volatility sequences with their static admissibility bounds:
/// a_lo <= |a_n| <= a_hi and b_lo <= |b_n| <= b_hi for every n.
struct MarketParams {
  std::vector<double> a;  // drift, per year
  std::vector<double> b;  // volatility, per sqrt-year
  double a_lo, a_hi, b_lo, b_hi;

  int steps() const { return static_cast<int>(a.size()); }

  static MarketParams bounded(std::vector<double> a, std::vector<double> b, double a_lo,
                              double a_hi, double b_lo, double b_hi);
  /// Constant coefficients with the tight bounds (|a|, |a|, |b|, |b|).
  static MarketParams constant(double a, double b, int steps);
};

/// Nonrandom control sequence with magnitude box 0 < lo <= |u_n| <= hi.
struct Strategy {
  std::vector<double> u;  // investment ratios, dimensionless
  double u_lo, u_hi;

  int steps() const { return static_cast<int>(u.size()); }

  static Strategy admissible(std::vector<double> u, double lo, double hi);
  static Strategy constant(double u, int steps);
  /// Skips the magnitude-box validation.  The recursion itself is defined for
  /// any control, including u = 0; tests and null cases use this.
  static Strategy raw(std::vector<double> u);
};

struct NoisePath {
  std::vector<double> xi;  // N standard-normal draws

  int steps() const { return static_cast<int>(xi.size()); }
};

struct WealthPath {
  std::vector<double> x;  // N+1 values, x[0] = x0
  bool all_positive;      // x[n] > 0 for n = 1..N
};

// One-step arithmetic shared by the trajectory ops and the Monte Carlo kernel.
// Everything that must agree bit-for-bit goes through these three expressions.
inline double step_drift(double h, double u, double a) { return 1.0 + (h * u) * a; }
inline double step_vol(double sqrt_h, double u, double b) { return (sqrt_h * u) * b; }
inline double wealth_factor(double drift, double vol, double xi) { return drift + vol * xi; }

/// Full trajectory of x_{n+1} = x_n (1 + h u_n a_n + sqrt(h) u_n b_n xi_{n+1}).
/// Negative wealth keeps evolving by the same recursion.
WealthPath simulate_path(const MarketParams& params, const Strategy& strat,
                         const Discretization& disc, double x0, const NoisePath& noise);

/// Terminal wealth as the product x0 * prod(1 + h u_i a_i + sqrt(h) u_i b_i xi_{i+1}).
double wealth_product_form(const MarketParams& params, const Strategy& strat,
                           const Discretization& disc, double x0, const NoisePath& noise);

/// Stock price path s_{n+1} = s_n (1 + h a_n + sqrt(h) b_n xi_{n+1}), s_0 = 1.
std::vector<double> simulate_stock(const MarketParams& params, const Discretization& disc,
                                   const NoisePath& noise);

/// Max_n |x_{n+1} - x_n - gamma_n (s_{n+1} - s_n)| with gamma_n = u_n x_n / s_n.
/// Zero in exact arithmetic for paths generated from the same noise.
double check_self_financing(const WealthPath& wealth, const std::vector<double>& stock,
                            const Strategy& strat);

}  // namespace merton

#pragma once

#include <stdexcept>
#include <string>

namespace merton {

/// A model quantity that must be nonzero (volatility, price, u*b product) is zero.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The step size is outside the regime where the per-step surrogate factors
/// stay positive.  Surfaced instead of clamping.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive integration failed to reach the requested error bound.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad experiment configuration (unknown key, unparsable value, constraint
/// violation).  The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace merton

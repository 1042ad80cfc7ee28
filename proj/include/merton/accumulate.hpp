#pragma once

#include <cmath>

namespace merton {

/// Neumaier-compensated accumulator.  Safe also when the addend exceeds the
/// running sum in magnitude.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  void add(const KahanSum& other) {
    add(other.sum);
    add(other.comp);
  }

  double value() const { return sum + comp; }
};

}  // namespace merton

#pragma once

#include <algorithm>

namespace widthlab {

/// Numeric tolerances shared by every discretized check.
struct Tolerances {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;

  /// Threshold for a quantity of magnitude `scale`.
  double at_scale(double scale) const {
    return std::max(abs_tol, rel_tol * std::max(1.0, scale));
  }
};

inline constexpr double kUnitNormTol = 1e-9;

}  // namespace widthlab

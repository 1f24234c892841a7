#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "widthlab/error.hpp"
#include "widthlab/tolerance.hpp"

namespace widthlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline int dim_of(const Vec& v) { return static_cast<int>(v.size()); }

/// Unit vector at angle t in the plane.
inline Vec unit_angle(double t) { return vec({std::cos(t), std::sin(t)}); }

inline void require_dim(int expected, int actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

inline void require_unit(const Vec& u) {
  if (!u.allFinite() || std::abs(u.norm() - 1.0) > kUnitNormTol)
    throw InvalidArgument("direction is not a unit vector (norm " +
                          std::to_string(u.norm()) + ")");
}

inline void require_finite(const Vec& v, const char* what) {
  if (v.size() < 1 || !v.allFinite())
    throw InvalidArgument(std::string(what) + " must be a finite vector of dimension >= 1");
}

}  // namespace widthlab

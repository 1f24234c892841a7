#pragma once

#include "widthlab/linalg.hpp"

namespace widthlab {

/// Similarity transformation g(x) = v + lambda * R x with R orthogonal.
class Similarity {
 public:
  Similarity(Vec translation, double ratio, Mat rotation);

  static Similarity identity(int dim);
  static Similarity translation(const Vec& v);
  static Similarity scaling(int dim, double ratio);
  /// Counterclockwise planar rotation about the origin.
  static Similarity rotation2d(double angle);

  int dim() const { return static_cast<int>(translation_.size()); }
  const Vec& translation() const { return translation_; }
  double ratio() const { return ratio_; }
  const Mat& rotation() const { return rotation_; }

  Vec apply(const Vec& x) const;
  Vec operator()(const Vec& x) const { return apply(x); }

  /// (*this) after `inner`: x -> this(inner(x)).
  Similarity compose(const Similarity& inner) const;
  Similarity inverse() const;

 private:
  Vec translation_;
  double ratio_;
  Mat rotation_;
};

/// Haar-like random orthogonal matrix (QR of a Gaussian matrix).
template <class Rng>
Mat random_orthogonal(int dim, Rng& rng);

}  // namespace widthlab

#include <random>

namespace widthlab {

template <class Rng>
Mat random_orthogonal(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = normal(rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace widthlab

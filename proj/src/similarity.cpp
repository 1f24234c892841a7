#include "widthlab/similarity.hpp"

#include <cmath>

namespace widthlab {

namespace {
constexpr double kOrthogonalityTol = 1e-10;
}

Similarity::Similarity(Vec translation, double ratio, Mat rotation)
    : translation_(std::move(translation)), ratio_(ratio), rotation_(std::move(rotation)) {
  require_finite(translation_, "translation");
  const int n = dim();
  if (!(ratio_ > 0.0) || !std::isfinite(ratio_))
    throw InvalidArgument("similarity ratio must be positive");
  if (rotation_.rows() != n || rotation_.cols() != n)
    throw DimensionMismatch(n, static_cast<int>(rotation_.rows()));
  const double defect = (rotation_ * rotation_.transpose() - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(defect <= kOrthogonalityTol))
    throw InvalidArgument("rotation matrix is not orthogonal");
}

Similarity Similarity::identity(int dim) {
  return {Vec::Zero(dim), 1.0, Mat::Identity(dim, dim)};
}

Similarity Similarity::translation(const Vec& v) {
  return {v, 1.0, Mat::Identity(v.size(), v.size())};
}

Similarity Similarity::scaling(int dim, double ratio) {
  return {Vec::Zero(dim), ratio, Mat::Identity(dim, dim)};
}

Similarity Similarity::rotation2d(double angle) {
  Mat r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return {Vec::Zero(2), 1.0, r};
}

Vec Similarity::apply(const Vec& x) const {
  require_dim(dim(), dim_of(x));
  return translation_ + ratio_ * (rotation_ * x);
}

Similarity Similarity::compose(const Similarity& inner) const {
  require_dim(dim(), inner.dim());
  return {apply(inner.translation_), ratio_ * inner.ratio_, rotation_ * inner.rotation_};
}

Similarity Similarity::inverse() const {
  Mat rt = rotation_.transpose();
  return {-(rt * translation_) / ratio_, 1.0 / ratio_, rt};
}

}  // namespace widthlab

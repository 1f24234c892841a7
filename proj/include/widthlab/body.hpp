#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "widthlab/grid.hpp"
#include "widthlab/linalg.hpp"
#include "widthlab/similarity.hpp"

namespace widthlab {

class Body;

struct PointHull {
  std::vector<Vec> points;
};

struct Ball {
  Vec center;
  double radius;
};

/// Intersection of closed balls in R^2 or R^3. The candidate tables are
/// filled at construction and reused by every support query.
struct BallIntersection {
  std::vector<Vec> centers;
  std::vector<double> radii;

  /// Circle of two boundary spheres (3-D): center, radius, unit axis.
  struct Circle {
    Vec center;
    double radius;
    Vec axis;
    std::size_t i, j;
  };
  /// Feasible boundary vertices: pairwise circle crossings in 2-D,
  /// triple-sphere corners in 3-D.
  std::vector<Vec> vertices;
  std::vector<Circle> circles;

  bool feasible(const Vec& x, double slack) const;
};

struct MinkTerm;

struct MinkComb {
  std::vector<MinkTerm> terms;
};

struct SimImage;
struct Reflected;
struct BodyNode;

/// Compact convex body represented by its exact support-function oracle.
/// Immutable; copies share structure.
class Body {
 public:
  static Body point_hull(std::vector<Vec> points);
  static Body point(const Vec& p) { return point_hull({p}); }
  static Body ball(Vec center, double radius);
  /// Nonempty intersection of balls; throws InvalidArgument when the
  /// feasibility probe finds the intersection empty.
  static Body ball_intersection(std::vector<Vec> centers, std::vector<double> radii);

  int dim() const { return dim_; }
  /// The variant describing this body (see BodyExpr below).
  const auto& expr() const;

  /// h_Y(u) for a unit vector u.
  double support(const Vec& u) const;
  /// A point y of the body with <y, u> = h_Y(u).
  Vec support_point(const Vec& u) const;

  /// Same as support() without the unit/dimension checks; for internal
  /// recursion on directions that are unit by construction.
  double support_unchecked(const Vec& u) const;
  Vec support_point_unchecked(const Vec& u) const;

 private:
  Body(int dim, std::shared_ptr<const BodyNode> node) : dim_(dim), node_(std::move(node)) {}
  friend Body minkowski(const std::vector<std::pair<double, Body>>& terms);
  friend Body apply_similarity(const Similarity& g, const Body& y);
  friend Body reflect(const Body& y);

  int dim_;
  std::shared_ptr<const BodyNode> node_;
};

struct MinkTerm {
  double coef;
  Body body;
};

struct SimImage {
  Similarity map;
  Body inner;
};

struct Reflected {
  Body inner;
};

using BodyExpr = std::variant<PointHull, Ball, BallIntersection, MinkComb, SimImage, Reflected>;

struct BodyNode {
  BodyExpr expr;
};

inline const auto& Body::expr() const { return node_->expr; }

/// sum_i coef_i * body_i; coefficients must be nonnegative.
Body minkowski(const std::vector<std::pair<double, Body>>& terms);
/// gY = {g(y) : y in Y}.
Body apply_similarity(const Similarity& g, const Body& y);
/// -Y.
Body reflect(const Body& y);

/// h_Y tabulated on a grid.
struct SupportSample {
  DirectionGrid grid;
  std::vector<double> values;
};

SupportSample sample_support(const Body& y, const DirectionGrid& grid);

}  // namespace widthlab

#include "widthlab/constructions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace widthlab {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument(std::string(what) + " must be positive");
}

}  // namespace

Body reuleaux_triangle(double d, const Similarity& pose) {
  require_positive(d, "width");
  require_dim(2, pose.dim());
  const double s3 = std::sqrt(3.0);
  std::vector<Vec> centers{pose(vec({0.0, 0.0})), pose(vec({d, 0.0})), pose(vec({d / 2.0, d * s3 / 2.0}))};
  const double r = pose.ratio() * d;
  return Body::ball_intersection(std::move(centers), {r, r, r});
}

std::vector<Body> rotated_family(double d, int l) {
  if (l < 1) throw InvalidArgument("rotated family needs l >= 1");
  std::vector<Body> family;
  family.reserve(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j)
    family.push_back(reuleaux_triangle(d, Similarity::rotation2d(j * std::numbers::pi / (3.0 * l))));
  return family;
}

double reuleaux_circumradius(double d, int k) {
  const double half_span = std::numbers::pi * static_cast<double>((k - 1) / 2) / static_cast<double>(k);
  return d / (2.0 * std::sin(half_span));
}

Body reuleaux_polygon(double d, int k, const Similarity& pose) {
  require_positive(d, "width");
  require_dim(2, pose.dim());
  if (k < 3 || k % 2 == 0)
    throw InvalidArgument("Reuleaux polygon needs an odd vertex count >= 3, got " + std::to_string(k));
  const double rho = reuleaux_circumradius(d, k);
  std::vector<Vec> centers;
  centers.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double t = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / k;
    centers.push_back(pose(rho * unit_angle(t)));
  }
  return Body::ball_intersection(std::move(centers),
                                 std::vector<double>(static_cast<std::size_t>(k), pose.ratio() * d));
}

Body cw_mixture_2d(double d, const std::vector<ReuleauxComponent>& components,
                   const std::vector<double>& weights) {
  require_positive(d, "width");
  if (weights.size() != components.size() + 1)
    throw InvalidArgument("mixture needs one weight per component plus the ball weight");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("mixture weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("mixture weights sum to zero");

  std::vector<std::pair<double, Body>> terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    const Similarity pose = Similarity::translation(c.offset).compose(Similarity::rotation2d(c.angle));
    terms.emplace_back(weights[i] / total, reuleaux_polygon(d, c.k, pose));
  }
  terms.emplace_back(weights.back() / total, Body::ball(Vec::Zero(2), d / 2.0));
  return minkowski(terms);
}

Body random_cw_body_2d(std::uint64_t seed, double d, int m) {
  if (m < 1) throw InvalidArgument("random body needs m >= 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick_k(0, 2);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> offset(-d, d);
  std::exponential_distribution<double> expo(1.0);
  std::vector<ReuleauxComponent> components;
  std::vector<double> weights;
  for (int i = 0; i < m; ++i) {
    const int k = 3 + 2 * pick_k(gen);
    const double a = angle(gen);
    const double ox = offset(gen);
    const double oy = offset(gen);
    components.push_back({k, a, vec({ox, oy})});
  }
  for (int i = 0; i <= m; ++i) weights.push_back(expo(gen));
  return cw_mixture_2d(d, components, weights);
}

std::vector<Vec> tetra_vertices(double edge) {
  const double s3 = std::sqrt(3.0);
  return {vec({0.0, 0.0, 0.0}), vec({edge, 0.0, 0.0}), vec({edge / 2.0, edge * s3 / 2.0, 0.0}),
          vec({edge / 2.0, edge * s3 / 6.0, edge * std::sqrt(2.0 / 3.0)})};
}

Body tetra_ball_body(double r) {
  require_positive(r, "radius");
  return Body::ball_intersection(tetra_vertices(r), {r, r, r, r});
}

Cw1Coords cw1_forward(const Interval1D& interval) {
  if (!(interval.lo <= interval.hi)) throw InvalidArgument("interval needs lo <= hi");
  return {interval.hi - interval.lo, (interval.lo + interval.hi) / 2.0};
}

Interval1D cw1_inverse(double d, double mid) {
  if (!(d >= 0.0)) throw InvalidArgument("width must be nonnegative");
  return {mid - d / 2.0, mid + d / 2.0};
}

PairParams1D crw1_forward(const IntervalPair& pair, double tol) {
  const auto& [first, second] = pair;
  const double x = first.lo, y = first.hi, v = second.lo, z = second.hi;
  if (!(x <= y) || !(v <= z)) throw InvalidArgument("interval needs lo <= hi");
  if (!(std::abs((z - x) - (y - v)) <= tol * std::max(1.0, std::abs(z - x))))
    throw InvalidArgument("interval pair is not of constant relative width");
  return {z - x, y - x, (x + y) / 2.0};
}

IntervalPair crw1_inverse(const PairParams1D& params) {
  const auto [d, a, p] = params;
  if (!(a >= 0.0) || !(a <= 2.0 * d)) throw InvalidArgument("parameters outside 0 <= a <= 2d");
  const double half = d - a / 2.0;
  return {{p - a / 2.0, p + a / 2.0}, {p - half, p + half}};
}

}  // namespace widthlab

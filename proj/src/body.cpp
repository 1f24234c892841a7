#include "widthlab/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "widthlab/parallel.hpp"

namespace widthlab {

namespace {

constexpr double kFeasibleSlack = 1e-9;
constexpr int kProbeIterations = 200;
constexpr double kProbeResidual = 1e-7;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Vec any_orthogonal(const Vec& axis) {
  Eigen::Index k;
  axis.cwiseAbs().minCoeff(&k);
  Vec e = Vec::Zero(axis.size());
  e[k] = 1.0;
  Vec w = e - e.dot(axis) * axis;
  return w / w.norm();
}

// Max residual of x against the balls, clamped at zero.
double infeasibility(const std::vector<Vec>& centers, const std::vector<double>& radii,
                     const Vec& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i)
    worst = std::max(worst, (x - centers[i]).norm() - radii[i]);
  return worst;
}

// Cyclic projections onto the balls starting from the centroid of centers.
bool probe_nonempty(const std::vector<Vec>& centers, const std::vector<double>& radii) {
  Vec x = Vec::Zero(centers.front().size());
  for (const auto& c : centers) x += c;
  x /= static_cast<double>(centers.size());
  for (int it = 0; it < kProbeIterations; ++it) {
    for (std::size_t i = 0; i < centers.size(); ++i) {
      const Vec off = x - centers[i];
      const double dist = off.norm();
      if (dist > radii[i]) x = centers[i] + off * (radii[i] / dist);
    }
    if (infeasibility(centers, radii, x) <= kProbeResidual * 1e-3) return true;
  }
  return infeasibility(centers, radii, x) <= kProbeResidual;
}

void build_2d_vertices(BallIntersection& bi) {
  const auto& c = bi.centers;
  const auto& r = bi.radii;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Vec delta = c[j] - c[i];
      const double dist = delta.norm();
      if (dist <= 1e-15 * std::max(1.0, r[i] + r[j])) continue;
      if (dist > r[i] + r[j] || dist < std::abs(r[i] - r[j])) continue;
      const double a = (dist * dist + r[i] * r[i] - r[j] * r[j]) / (2.0 * dist);
      const double h = std::sqrt(std::max(0.0, r[i] * r[i] - a * a));
      const Vec e = delta / dist;
      const Vec perp = vec({-e[1], e[0]});
      for (double sign : {1.0, -1.0}) {
        Vec p = c[i] + a * e + sign * h * perp;
        if (bi.feasible(p, kFeasibleSlack)) bi.vertices.push_back(std::move(p));
      }
    }
  }
}

void build_3d_tables(BallIntersection& bi) {
  const auto& c = bi.centers;
  const auto& r = bi.radii;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vec delta = c[j] - c[i];
      const double dist = delta.norm();
      if (dist <= 1e-15 * std::max(1.0, r[i] + r[j])) continue;
      if (dist > r[i] + r[j] || dist < std::abs(r[i] - r[j])) continue;
      const double a = (dist * dist + r[i] * r[i] - r[j] * r[j]) / (2.0 * dist);
      const double h = std::sqrt(std::max(0.0, r[i] * r[i] - a * a));
      const Vec e = delta / dist;
      bi.circles.push_back({c[i] + a * e, h, e, i, j});
    }
  }
  // Corners: points on three spheres. The two radical-plane equations
  // 2<c_j - c_i, x> = |c_j|^2 - |c_i|^2 + r_i^2 - r_j^2 cut a line, which
  // meets sphere i in at most two points.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        Eigen::Matrix<double, 2, 3> a;
        a.row(0) = 2.0 * (c[j] - c[i]).transpose();
        a.row(1) = 2.0 * (c[k] - c[i]).transpose();
        Eigen::Vector2d b(c[j].squaredNorm() - c[i].squaredNorm() + r[i] * r[i] - r[j] * r[j],
                          c[k].squaredNorm() - c[i].squaredNorm() + r[i] * r[i] - r[k] * r[k]);
        const Eigen::Vector3d dir = Eigen::Vector3d(a.row(0).transpose())
                                        .cross(Eigen::Vector3d(a.row(1).transpose()));
        const double dn = dir.norm();
        if (dn <= 1e-14 * std::max(1.0, a.norm() * a.norm())) continue;
        // least-norm point on the line
        const Eigen::Vector3d p0 = a.transpose() * (a * a.transpose()).ldlt().solve(b);
        const Eigen::Vector3d t = dir / dn;
        const Eigen::Vector3d w = p0 - Eigen::Vector3d(c[i]);
        const double bq = w.dot(t);
        const double cq = w.squaredNorm() - r[i] * r[i];
        const double disc = bq * bq - cq;
        if (disc < -1e-12 * std::max(1.0, r[i] * r[i])) continue;
        const double root = std::sqrt(std::max(0.0, disc));
        for (double s : {-bq + root, -bq - root}) {
          Vec p = p0 + s * t;
          if (bi.feasible(p, kFeasibleSlack)) bi.vertices.push_back(std::move(p));
        }
      }
    }
  }
}

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  Vec point;
  void offer(const Vec& p, const Vec& u) {
    const double v = p.dot(u);
    if (v > value) {
      value = v;
      point = p;
    }
  }
};

Candidate ball_intersection_max(const BallIntersection& bi, const Vec& u) {
  Candidate best;
  // Retry with looser slack only if rounding rejected every candidate.
  for (double slack = kFeasibleSlack; slack <= 1e-6 && best.point.size() == 0; slack *= 10.0) {
    for (std::size_t i = 0; i < bi.centers.size(); ++i) {
      Vec p = bi.centers[i] + bi.radii[i] * u;
      if (bi.feasible(p, slack)) best.offer(p, u);
    }
    for (const auto& v : bi.vertices) best.offer(v, u);
    for (const auto& circ : bi.circles) {
      Vec w = u - u.dot(circ.axis) * circ.axis;
      const double wn = w.norm();
      w = wn > 1e-12 ? Vec(w / wn) : any_orthogonal(circ.axis);
      Vec p = circ.center + circ.radius * w;
      if (bi.feasible(p, slack)) best.offer(p, u);
    }
  }
  if (best.point.size() == 0)
    throw Error("ball intersection support: no feasible candidate (degenerate configuration)");
  return best;
}

}  // namespace

bool BallIntersection::feasible(const Vec& x, double slack) const {
  for (std::size_t i = 0; i < centers.size(); ++i)
    if ((x - centers[i]).norm() > radii[i] + slack * std::max(1.0, radii[i])) return false;
  return true;
}

Body Body::point_hull(std::vector<Vec> points) {
  if (points.empty()) throw InvalidArgument("point hull needs at least one point");
  const int n = dim_of(points.front());
  for (const auto& p : points) {
    require_finite(p, "point");
    require_dim(n, dim_of(p));
  }
  return Body(n, std::make_shared<const BodyNode>(PointHull{std::move(points)}));
}

Body Body::ball(Vec center, double radius) {
  require_finite(center, "ball center");
  if (!(radius >= 0.0) || !std::isfinite(radius))
    throw InvalidArgument("ball radius must be a finite nonnegative number");
  const int n = dim_of(center);
  return Body(n, std::make_shared<const BodyNode>(Ball{std::move(center), radius}));
}

Body Body::ball_intersection(std::vector<Vec> centers, std::vector<double> radii) {
  if (centers.empty()) throw InvalidArgument("ball intersection needs at least one ball");
  if (centers.size() != radii.size())
    throw InvalidArgument("ball intersection: centers and radii differ in length");
  const int n = dim_of(centers.front());
  if (n != 2 && n != 3)
    throw Unsupported("ball intersection is supported in dimensions 2 and 3 only, got " +
                      std::to_string(n));
  for (std::size_t i = 0; i < centers.size(); ++i) {
    require_finite(centers[i], "ball center");
    require_dim(n, dim_of(centers[i]));
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i]))
      throw InvalidArgument("ball intersection radii must be positive");
  }
  if (!probe_nonempty(centers, radii)) throw InvalidArgument("ball intersection is empty");

  BallIntersection bi{std::move(centers), std::move(radii), {}, {}};
  if (n == 2)
    build_2d_vertices(bi);
  else
    build_3d_tables(bi);
  return Body(n, std::make_shared<const BodyNode>(std::move(bi)));
}

double Body::support(const Vec& u) const {
  require_dim(dim_, dim_of(u));
  require_unit(u);
  return support_unchecked(u);
}

Vec Body::support_point(const Vec& u) const {
  require_dim(dim_, dim_of(u));
  require_unit(u);
  return support_point_unchecked(u);
}

double Body::support_unchecked(const Vec& u) const {
  return std::visit(
      Overloaded{
          [&](const PointHull& ph) {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& p : ph.points) best = std::max(best, p.dot(u));
            return best;
          },
          [&](const Ball& b) { return b.center.dot(u) + b.radius; },
          [&](const BallIntersection& bi) { return ball_intersection_max(bi, u).value; },
          [&](const MinkComb& mc) {
            double sum = 0.0;
            for (const auto& t : mc.terms) sum += t.coef * t.body.support_unchecked(u);
            return sum;
          },
          [&](const SimImage& si) {
            const Vec ru = si.map.rotation().transpose() * u;
            return si.map.translation().dot(u) + si.map.ratio() * si.inner.support_unchecked(ru);
          },
          [&](const Reflected& r) { return r.inner.support_unchecked(-u); },
      },
      node_->expr);
}

Vec Body::support_point_unchecked(const Vec& u) const {
  return std::visit(
      Overloaded{
          [&](const PointHull& ph) {
            std::size_t arg = 0;
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < ph.points.size(); ++k) {
              const double v = ph.points[k].dot(u);
              if (v > best) {
                best = v;
                arg = k;
              }
            }
            return Vec(ph.points[arg]);
          },
          [&](const Ball& b) { return Vec(b.center + b.radius * u); },
          [&](const BallIntersection& bi) { return ball_intersection_max(bi, u).point; },
          [&](const MinkComb& mc) {
            Vec sum = Vec::Zero(dim_);
            for (const auto& t : mc.terms) sum += t.coef * t.body.support_point_unchecked(u);
            return sum;
          },
          [&](const SimImage& si) {
            const Vec ru = si.map.rotation().transpose() * u;
            return si.map.apply(si.inner.support_point_unchecked(ru));
          },
          [&](const Reflected& r) { return Vec(-r.inner.support_point_unchecked(-u)); },
      },
      node_->expr);
}

Body minkowski(const std::vector<std::pair<double, Body>>& terms) {
  if (terms.empty()) throw InvalidArgument("Minkowski combination needs at least one term");
  const int n = terms.front().second.dim();
  MinkComb mc;
  mc.terms.reserve(terms.size());
  for (const auto& [coef, body] : terms) {
    require_dim(n, body.dim());
    if (!(coef >= 0.0) || !std::isfinite(coef))
      throw InvalidArgument("Minkowski coefficients must be finite and nonnegative");
    mc.terms.push_back({coef, body});
  }
  return Body(n, std::make_shared<const BodyNode>(std::move(mc)));
}

Body apply_similarity(const Similarity& g, const Body& y) {
  require_dim(y.dim(), g.dim());
  return Body(y.dim(), std::make_shared<const BodyNode>(SimImage{g, y}));
}

Body reflect(const Body& y) {
  return Body(y.dim(), std::make_shared<const BodyNode>(Reflected{y}));
}

SupportSample sample_support(const Body& y, const DirectionGrid& grid) {
  require_dim(y.dim(), grid.dim());
  SupportSample s{grid, std::vector<double>(grid.size())};
  parallel_for(grid.size(), [&](std::size_t k) { s.values[k] = y.support_unchecked(grid[k]); });
  return s;
}

}  // namespace widthlab

#include "widthlab/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numbers>
#include <numeric>
#include <random>

namespace widthlab {

namespace {

struct Sphere {
  Vec center;
  double sq_radius = -1.0;  // negative: contains nothing

  bool contains(const Vec& p) const {
    if (sq_radius < 0) return false;
    const double d2 = (p - center).squaredNorm();
    return d2 <= sq_radius * (1.0 + 1e-13) + 1e-28;
  }
};

// Ball through all support points with its center in their affine hull.
Sphere circumsphere(const std::vector<const Vec*>& support, int dim) {
  Sphere s;
  if (support.empty()) {
    s.center = Vec::Zero(dim);
    return s;
  }
  const Vec& p0 = *support.front();
  const Eigen::Index m = static_cast<Eigen::Index>(support.size()) - 1;
  if (m == 0) {
    s.center = p0;
    s.sq_radius = 0.0;
    return s;
  }
  Mat q(dim, m);
  for (Eigen::Index i = 0; i < m; ++i) q.col(i) = *support[i + 1] - p0;
  const Mat gram = 2.0 * q.transpose() * q;
  const Vec rhs = q.colwise().squaredNorm().transpose();
  const Vec lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  s.center = p0 + q * lambda;
  double r2 = 0.0;
  for (const Vec* p : support) r2 = std::max(r2, (*p - s.center).squaredNorm());
  s.sq_radius = r2;
  return s;
}

class MoveToFront {
 public:
  MoveToFront(const std::vector<Vec>& points, int dim) : dim_(dim) {
    std::vector<const Vec*> shuffled;
    shuffled.reserve(points.size());
    for (const auto& p : points) shuffled.push_back(&p);
    // fixed seed: the result is unique, the visiting order only affects speed
    std::mt19937 gen(12345u);
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    order_.assign(shuffled.begin(), shuffled.end());
  }

  Sphere solve() {
    support_.clear();
    return recurse(order_.end());
  }

 private:
  Sphere recurse(std::list<const Vec*>::iterator end) {
    Sphere ball = circumsphere(support_, dim_);
    if (static_cast<int>(support_.size()) == dim_ + 1) return ball;
    for (auto it = order_.begin(); it != end;) {
      auto next = std::next(it);
      if (!ball.contains(**it)) {
        support_.push_back(*it);
        ball = recurse(it);
        support_.pop_back();
        if (it != order_.begin()) order_.splice(order_.begin(), order_, it);
      }
      it = next;
    }
    return ball;
  }

  int dim_;
  std::list<const Vec*> order_;
  std::vector<const Vec*> support_;
};

double residual(const Body& y, const Vec& c, const Vec& u) {
  return y.support_unchecked(u) - c.dot(u);
}

// Local maximization of the residual on the sphere around u0; `step` is the
// initial angular radius.
Vec refine_direction(const Body& y, const Vec& c, const Vec& u0, double step) {
  const int n = y.dim();
  if (n == 1) return u0;
  if (n == 2) {
    const double t0 = std::atan2(u0[1], u0[0]);
    double a = t0 - step, b = t0 + step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = residual(y, c, unit_angle(x1)), f2 = residual(y, c, unit_angle(x2));
    for (int it = 0; it < 60 && (b - a) > 1e-13; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = residual(y, c, unit_angle(x2));
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = residual(y, c, unit_angle(x1));
      }
    }
    const Vec best = unit_angle(0.5 * (a + b));
    return residual(y, c, best) >= residual(y, c, u0) ? best : u0;
  }
  // Compass search in the tangent space of u0.
  Mat basis(n, n - 1);
  {
    Mat full = Mat::Identity(n, n);
    full.col(0) = u0;
    Eigen::HouseholderQR<Mat> qr(full);
    Mat q = qr.householderQ();
    basis = q.rightCols(n - 1);
  }
  Vec coords = Vec::Zero(n - 1);
  auto point = [&](const Vec& x) {
    Vec u = u0 + basis * x;
    return Vec(u / u.norm());
  };
  double best = residual(y, c, u0);
  double h = step;
  while (h > 1e-11) {
    bool improved = false;
    for (int i = 0; i < n - 1 && !improved; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec trial = coords;
        trial[i] += sign * h;
        const double f = residual(y, c, point(trial));
        if (f > best) {
          best = f;
          coords = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
  return point(coords);
}

double angular_spacing(const DirectionGrid& grid) {
  const double n = static_cast<double>(grid.size());
  switch (grid.dim()) {
    case 1: return 0.0;
    case 2: return 2.0 * std::numbers::pi / n;
    default: {
      // generous covering radius for quasi-uniform samples
      const double area = 2.0 * std::pow(std::numbers::pi, grid.dim() / 2.0) /
                          std::tgamma(grid.dim() / 2.0);
      return 2.0 * std::pow(area / n, 1.0 / (grid.dim() - 1));
    }
  }
}

std::vector<Vec> active_grid_dirs(const Body& y, const DirectionGrid& grid, const Vec& c,
                                  double radius, double band) {
  std::vector<Vec> active;
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (residual(y, c, grid[k]) >= radius - band) active.push_back(grid[k]);
  return active;
}

}  // namespace

ChebyshevData min_enclosing_ball_points(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidArgument("enclosing ball of an empty point set");
  const int n = dim_of(points.front());
  for (const auto& p : points) {
    require_finite(p, "point");
    require_dim(n, dim_of(p));
  }
  const Sphere s = MoveToFront(points, n).solve();
  ChebyshevData out;
  out.center = s.center;
  out.radius = std::sqrt(std::max(0.0, s.sq_radius));
  const double band = 1e-9 * (1.0 + out.radius);
  for (const auto& p : points) {
    const Vec off = p - out.center;
    const double dist = off.norm();
    if (dist > 0 && dist >= out.radius - band) out.active_dirs.push_back(off / dist);
  }
  return out;
}

ChebyshevData chebyshev(const Body& y, const DirectionGrid& grid, const ChebyshevOptions& options) {
  require_dim(y.dim(), grid.dim());
  if (const auto* ph = std::get_if<PointHull>(&y.expr())) return min_enclosing_ball_points(ph->points);

  ChebyshevData out;
  if (const auto* b = std::get_if<Ball>(&y.expr())) {
    out.center = b->center;
    out.radius = b->radius;
    out.active_dirs = grid.directions();
    return out;
  }

  std::vector<Vec> points;
  points.reserve(grid.size() + 16);
  for (const auto& u : grid.directions()) points.push_back(y.support_point_unchecked(u));
  ChebyshevData ball = min_enclosing_ball_points(points);

  const double step = angular_spacing(grid);
  std::vector<std::size_t> order(grid.size());
  std::vector<double> res(grid.size());
  for (int round = 0;; ++round) {
    for (std::size_t k = 0; k < grid.size(); ++k) res[k] = residual(y, ball.center, grid[k]);
    std::iota(order.begin(), order.end(), 0);
    const std::size_t top = std::min<std::size_t>(grid.size(), static_cast<std::size_t>(options.refine_count));
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top), order.end(),
                      [&](std::size_t a, std::size_t b) { return res[a] > res[b]; });

    double farthest = ball.radius;
    std::size_t added = 0;
    const double threshold = options.tol * (1.0 + ball.radius);
    for (std::size_t i = 0; i < top; ++i) {
      const Vec u = refine_direction(y, ball.center, grid[order[i]], step);
      const double r = residual(y, ball.center, u);
      farthest = std::max(farthest, r);
      if (r > ball.radius + threshold) {
        points.push_back(y.support_point_unchecked(u));
        ++added;
      }
    }
    const double gap = farthest - ball.radius;
    if (added == 0 || gap <= threshold) break;
    if (round + 1 >= options.max_iterations) throw MaxIterations(round + 1, gap);
    ball = min_enclosing_ball_points(points);
  }

  out.center = ball.center;
  out.radius = ball.radius;
  out.active_dirs =
      active_grid_dirs(y, grid, out.center, out.radius, options.active_tol * (1.0 + out.radius));
  return out;
}

}  // namespace widthlab

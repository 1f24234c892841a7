#include "widthlab/hyperspace.hpp"

#include <algorithm>
#include <cmath>

namespace widthlab {

BodyPair certify_pair(const Body& left, const Body& right, const DirectionGrid& grid, double tol) {
  require_dim(left.dim(), right.dim());
  const WidthReport r = relative_width_report(left, right, grid);
  BodyPair pair{left, right, std::nullopt};
  if (r.spread <= tol * std::max(1.0, r.mean_width)) pair.certified_width = r.mean_width;
  return pair;
}

FiberPoint eta(const Body& y, const DirectionGrid& grid, double tol, const ChebyshevOptions& options) {
  const WidthReport r = width_report(y, grid);
  if (r.spread > tol * std::max(1.0, r.mean_width)) throw NotConstantWidth(r.spread);
  return {r.mean_width, chebyshev(y, grid, options).center};
}

bool same_fiber(const FiberPoint& a, const FiberPoint& b, const FiberTolerances& tol) {
  return std::abs(a.width - b.width) <= tol.width * std::max(1.0, a.width) &&
         a.center.size() == b.center.size() &&
         (a.center - b.center).norm() <= tol.center * std::max(1.0, a.width);
}

Body eta_fiber_homotopy(const Body& a, double t, const FiberPoint& fiber, const DirectionGrid& grid,
                        const FiberTolerances& tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("homotopy parameter must lie in [0, 1]");
  require_dim(a.dim(), dim_of(fiber.center));
  if (!same_fiber(eta(a, grid, tol.width), fiber, tol))
    throw InvalidArgument("body does not lie in the requested eta fiber");
  const Body ball = Body::ball(fiber.center, fiber.width / 2.0);
  return minkowski({{t, a}, {1.0 - t, ball}});
}

BodyPair embed_pair(const Body& y, const DirectionGrid& grid, double tol) {
  return certify_pair(y, y, grid, tol);
}

Body phi(const BodyPair& pair) {
  if (!pair.certified_width) throw InvalidArgument("pair is not certified of constant relative width");
  return minkowski({{0.5, pair.left}, {0.5, pair.right}});
}

BodyPair phi_fiber_combination(const BodyPair& p1, const BodyPair& p2, double t,
                               const DirectionGrid& grid, double tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("combination parameter must lie in [0, 1]");
  const Body image1 = phi(p1);
  const Body image2 = phi(p2);
  const double d = *p1.certified_width;
  const double gap = hausdorff(image1, image2, grid);
  if (gap > tol * (1.0 + d)) throw InvalidArgument("pairs lie in different Phi fibers");
  const Body left = minkowski({{t, p1.left}, {1.0 - t, p2.left}});
  const Body right = minkowski({{t, p1.right}, {1.0 - t, p2.right}});
  return certify_pair(left, right, grid, tol);
}

MaeharaReport maehara_check(const BodyPair& pair, const DirectionGrid& grid, double mean_tol,
                            double spread_tol) {
  if (!pair.certified_width) throw InvalidArgument("pair is not certified of constant relative width");
  const double d = *pair.certified_width;
  const Body sum = minkowski({{1.0, pair.left}, {1.0, pair.right}});
  MaeharaReport rep{d, width_report(sum, grid), false};
  rep.holds = std::abs(rep.sum_report.mean_width - 2.0 * d) <= mean_tol * std::max(1.0, d) &&
              rep.sum_report.spread <= spread_tol * std::max(1.0, 2.0 * d);
  return rep;
}

ProperBoundReport properness_bound_check(const BodyPair& pair, double bound, const DirectionGrid& grid,
                                         std::size_t samples, double tol) {
  if (!pair.certified_width) throw InvalidArgument("InvalidBound: pair is not certified");
  const double d = *pair.certified_width;
  if (!(bound > 0.0) || d > bound + tol)
    throw InvalidArgument("InvalidBound: relative width exceeds the bound M");
  const Body half_sum = minkowski({{0.5, pair.left}, {0.5, pair.right}});
  for (const auto& u : grid.directions())
    if (half_sum.support_unchecked(u) > bound + tol * std::max(1.0, bound))
      throw InvalidArgument("InvalidBound: (Y + Z)/2 is not contained in B(0, M)");
  if (samples == 0) throw InvalidArgument("InvalidBound: need at least one sample");

  // Support points of Y along one set of grid directions paired with
  // support points of Z along a shifted set, so y and z are not matched.
  ProperBoundReport rep{samples, 0.0, 0.0, 0.0, 0.0, 0.0, true};
  const std::size_t n = grid.size();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t ky = (s * n) / samples;
    const std::size_t kz = (ky * 7 + n / 3 + s) % n;
    const Vec y = pair.left.support_point_unchecked(grid[ky]);
    const Vec z = pair.right.support_point_unchecked(grid[kz]);
    const double lhs = y.squaredNorm() + z.squaredNorm();
    const double rhs = 0.5 * ((y + z).squaredNorm() + (y - z).squaredNorm());
    rep.max_parallelogram_residual =
        std::max(rep.max_parallelogram_residual, std::abs(lhs - rhs) / std::max(1.0, lhs));
    rep.max_norm_left = std::max(rep.max_norm_left, y.norm());
    rep.max_norm_right = std::max(rep.max_norm_right, z.norm());
    rep.max_difference = std::max(rep.max_difference, (y - z).norm());
    rep.max_sum = std::max(rep.max_sum, (y + z).norm());
  }
  const double slack = tol * std::max(1.0, bound);
  rep.holds = rep.max_parallelogram_residual <= 1e-12 && rep.max_difference <= d + slack &&
              rep.max_sum <= 2.0 * bound + 2.0 * slack && rep.max_norm_left < 2.0 * bound &&
              rep.max_norm_right < 2.0 * bound;
  return rep;
}

}  // namespace widthlab

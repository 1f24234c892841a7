#include "widthlab/experiments.hpp"

#include <cmath>
#include <numbers>

#include "widthlab/constructions.hpp"
#include "widthlab/parallel.hpp"

namespace widthlab {

GramReport gram_rank(int l, double d, const DirectionGrid& grid, double threshold) {
  if (l < 1) throw InvalidArgument("gram_rank needs l >= 1");
  require_dim(2, grid.dim());
  if (grid.size() < 8 * static_cast<std::size_t>(l))
    throw InvalidArgument("gram_rank needs at least 8l grid directions");
  const auto family = rotated_family(d, l);
  const std::size_t n = grid.size();
  Mat m(l, static_cast<Eigen::Index>(n));
  parallel_for(static_cast<std::size_t>(l) * n, [&](std::size_t idx) {
    const std::size_t j = idx / n, k = idx % n;
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = family[j].support_unchecked(grid[k]);
  });

  // Singular values of M equal square roots of eig(M M^T); Jacobi on the
  // l x N matrix directly keeps small singular values accurate.
  Eigen::JacobiSVD<Mat> svd(m);
  GramReport rep;
  rep.l = l;
  rep.threshold = threshold;
  const Vec sv = svd.singularValues();
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double cutoff = threshold * (sv.size() ? sv[0] : 0.0);
  for (double s : rep.singular_values)
    if (s > cutoff) ++rep.numerical_rank;
  return rep;
}

ProofPointReport proof_point_checks(int l, double d, double tol) {
  if (l < 2) throw InvalidArgument("proof_point_checks needs l >= 2");
  const auto family = rotated_family(d, l);
  ProofPointReport rep{l, d, 0, {}};
  const double pi = std::numbers::pi;

  const Vec top = unit_angle(pi / 3.0);
  for (int j = 0; j < l; ++j) {
    const double v = family[j].support(top);
    ++rep.checks;
    if (std::abs(v - d) > tol * std::max(1.0, d)) rep.failures.push_back({j, -1, v, "= d"});
  }
  for (int s = 1; s < l; ++s) {
    const Vec u = unit_angle(pi / 3.0 + s * pi / (3.0 * l));
    for (int j = s - 1; j < l; ++j) {
      const double v = family[j].support(u);
      ++rep.checks;
      if (j >= s) {
        if (std::abs(v - d) > tol * std::max(1.0, d)) rep.failures.push_back({j, s, v, "= d"});
      } else if (!(v > tol && v < d - tol * std::max(1.0, d))) {
        rep.failures.push_back({j, s, v, "in (0, d)"});
      }
    }
  }
  return rep;
}

SweepReport ball_intersection_width_sweep(const Body& body, const DirectionGrid& grid) {
  const auto* bi = std::get_if<BallIntersection>(&body.expr());
  if (!bi) throw InvalidArgument("width sweep expects a ball intersection");
  SweepReport rep;
  rep.widths = width_report(body, grid);
  rep.ratio = rep.widths.min_width > 0 ? rep.widths.max_width / rep.widths.min_width
                                       : std::numeric_limits<double>::infinity();
  rep.single_ball = false;
  for (std::size_t i = 0; i < bi->centers.size() && !rep.single_ball; ++i) {
    bool inside_all = true;
    for (std::size_t j = 0; j < bi->centers.size() && inside_all; ++j)
      inside_all = (bi->centers[i] - bi->centers[j]).norm() + bi->radii[i] <= bi->radii[j] + 1e-12;
    rep.single_ball = inside_all;
  }
  rep.gap_expected = body.dim() == 3 && !rep.single_ball;
  rep.gap_detected = rep.widths.spread > 0.005 * rep.widths.mean_width;
  return rep;
}

}  // namespace widthlab

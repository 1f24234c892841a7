#include "widthlab/width.hpp"

#include <algorithm>
#include <cmath>

#include "widthlab/parallel.hpp"

namespace widthlab {

WidthRange::WidthRange(double lo, double hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (!(lo >= 0.0) || std::isinf(lo)) throw InvalidArgument("width range: lo must be finite and >= 0");
  if (std::isnan(hi) || hi < lo) throw InvalidArgument("width range: need lo <= hi");
  if (std::isinf(hi)) hi_closed_ = false;
}

bool WidthRange::contains(double d) const {
  if (std::isnan(d)) return false;
  const bool above = lo_closed_ ? d >= lo_ : d > lo_;
  const bool below = hi_closed_ ? d <= hi_ : d < hi_;
  return above && below;
}

bool WidthRange::is_empty() const {
  return lo_ == hi_ && !(lo_closed_ && hi_closed_);
}

double width(const Body& y, const Vec& u) {
  return y.support(u) + y.support_unchecked(-u);
}

double relative_width(const Body& y, const Body& z, const Vec& u) {
  require_dim(y.dim(), z.dim());
  return y.support(u) + z.support_unchecked(-u);
}

namespace {

WidthReport summarize(const DirectionGrid& grid, const std::vector<double>& w) {
  WidthReport r;
  const std::size_t half = grid.half_size();
  std::size_t arg_min = 0, arg_max = 0;
  double sum = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    if (w[k] < w[arg_min]) arg_min = k;
    if (w[k] > w[arg_max]) arg_max = k;
    sum += w[k];
  }
  r.min_width = w[arg_min];
  r.max_width = w[arg_max];
  r.spread = r.max_width - r.min_width;
  r.mean_width = std::clamp(sum / static_cast<double>(half), r.min_width, r.max_width);
  r.witness_dir_min = grid[arg_min];
  r.witness_dir_max = grid[arg_max];
  return r;
}

}  // namespace

WidthReport width_report(const Body& y, const DirectionGrid& grid) {
  return relative_width_report(y, y, grid);
}

WidthReport relative_width_report(const Body& y, const Body& z, const DirectionGrid& grid) {
  require_dim(y.dim(), grid.dim());
  require_dim(y.dim(), z.dim());
  std::vector<double> w(grid.half_size());
  parallel_for(w.size(), [&](std::size_t k) {
    w[k] = y.support_unchecked(grid[k]) + z.support_unchecked(grid[grid.antipode(k)]);
  });
  return summarize(grid, w);
}

WidthVerdict classify_report(const WidthReport& report, const WidthRange& range, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("classification tolerance must be positive");
  const double d = report.mean_width;
  if (report.spread > tol * std::max(1.0, d)) return NotConstant{report.spread};
  if (range.contains(d)) return InCwD{d};
  return ConstantButOutsideD{d};
}

WidthVerdict classify_constant_width(const Body& y, const DirectionGrid& grid,
                                     const WidthRange& range, double tol) {
  return classify_report(width_report(y, grid), range, tol);
}

std::string verdict_name(const WidthVerdict& v) {
  switch (v.index()) {
    case 0: return "in_cw_d";
    case 1: return "constant_outside_d";
    default: return "not_constant_width";
  }
}

double sup_distance(const SupportSample& a, const SupportSample& b) {
  if (a.values.size() != b.values.size())
    throw InvalidArgument("support samples taken on different grids");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  return worst;
}

double hausdorff(const Body& y, const Body& z, const DirectionGrid& grid) {
  require_dim(y.dim(), z.dim());
  return sup_distance(sample_support(y, grid), sample_support(z, grid));
}

double diameter(const Body& y, const DirectionGrid& grid) {
  if (const auto* ph = std::get_if<PointHull>(&y.expr())) {
    double best = 0.0;
    for (std::size_t i = 0; i < ph->points.size(); ++i)
      for (std::size_t j = i + 1; j < ph->points.size(); ++j)
        best = std::max(best, (ph->points[i] - ph->points[j]).norm());
    return best;
  }
  if (const auto* b = std::get_if<Ball>(&y.expr())) return 2.0 * b->radius;
  return width_report(y, grid).max_width;
}

}  // namespace widthlab

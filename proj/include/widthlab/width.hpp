#pragma once

#include <limits>
#include <string>
#include <variant>

#include "widthlab/body.hpp"
#include "widthlab/grid.hpp"
#include "widthlab/tolerance.hpp"

namespace widthlab {

/// Convex subset D of [0, inf) given by endpoints and closedness flags.
class WidthRange {
 public:
  WidthRange(double lo, double hi, bool lo_closed, bool hi_closed);

  /// [0, inf)
  static WidthRange all() { return {0.0, kInf, true, false}; }
  /// (0, inf)
  static WidthRange positive() { return {0.0, kInf, false, false}; }
  /// {d}
  static WidthRange singleton(double d) { return {d, d, true, true}; }
  static WidthRange closed(double lo, double hi) { return {lo, hi, true, true}; }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool contains(double d) const;
  bool is_empty() const;
  /// The degenerate range {0}.
  bool is_zero_only() const { return lo_ == 0.0 && hi_ == 0.0 && lo_closed_ && hi_closed_; }

  static constexpr double kInf = std::numeric_limits<double>::infinity();

 private:
  double lo_, hi_;
  bool lo_closed_, hi_closed_;
};

/// Width statistics of one body over one grid.
struct WidthReport {
  double min_width = 0.0;
  double max_width = 0.0;
  double spread = 0.0;
  double mean_width = 0.0;
  Vec witness_dir_min;
  Vec witness_dir_max;
};

/// w_Y(u) = h_Y(u) + h_Y(-u)
double width(const Body& y, const Vec& u);
/// w_(Y,Z)(u) = h_Y(u) + h_Z(-u)
double relative_width(const Body& y, const Body& z, const Vec& u);

/// Width over one representative of each antipodal pair of the grid.
WidthReport width_report(const Body& y, const DirectionGrid& grid);
/// Same statistics for the relative width of a pair.
WidthReport relative_width_report(const Body& y, const Body& z, const DirectionGrid& grid);

struct InCwD {
  double width;
};
struct ConstantButOutsideD {
  double width;
};
struct NotConstant {
  double spread;
};
using WidthVerdict = std::variant<InCwD, ConstantButOutsideD, NotConstant>;

/// Constant width iff spread <= tol * max(1, mean width).
WidthVerdict classify_constant_width(const Body& y, const DirectionGrid& grid,
                                     const WidthRange& range, double tol = 1e-7);
WidthVerdict classify_report(const WidthReport& report, const WidthRange& range, double tol);

std::string verdict_name(const WidthVerdict& v);

/// max_k |h_Y(u_k) - h_Z(u_k)|: sampled Hausdorff distance.
double hausdorff(const Body& y, const Body& z, const DirectionGrid& grid);
/// Sup-norm distance of two samples taken on the same grid.
double sup_distance(const SupportSample& a, const SupportSample& b);

/// Exact pairwise maximum for point hulls, max width over the grid otherwise.
double diameter(const Body& y, const DirectionGrid& grid);

}  // namespace widthlab

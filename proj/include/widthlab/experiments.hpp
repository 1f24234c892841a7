#pragma once

#include <string>
#include <vector>

#include "widthlab/body.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

struct GramReport {
  int l = 0;
  std::vector<double> singular_values;  // descending
  int numerical_rank = 0;
  double threshold = 1e-8;
};

/// Rank of the l x N matrix M[j][k] = h_j(u_k) over the rotated Reuleaux
/// family; singular values above threshold * sigma_max count.
GramReport gram_rank(int l, double d, const DirectionGrid& grid, double threshold = 1e-8);

struct ProofPointFailure {
  int j;
  int s;  // -1 for the e^{i pi/3} checks
  double value;
  std::string expectation;
};

struct ProofPointReport {
  int l;
  double d;
  std::size_t checks = 0;
  std::vector<ProofPointFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Evaluates the family at e^{i pi/3} (all equal d) and at
/// e^{i(pi/3 + s pi/(3l))}, s = 1..l-1 (equal d for j >= s, strictly inside
/// (0, d) for j = s - 1).
ProofPointReport proof_point_checks(int l, double d, double tol = 1e-9);

struct SweepReport {
  WidthReport widths;
  double ratio;          // max / min
  bool single_ball;      // some ball lies inside all others
  bool gap_expected;     // 3-D, more than one effective ball
  bool gap_detected;     // spread > 0.005 * mean
};

/// Width sweep of a 2-D or 3-D ball intersection.
SweepReport ball_intersection_width_sweep(const Body& body, const DirectionGrid& grid);

}  // namespace widthlab

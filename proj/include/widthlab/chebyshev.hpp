#pragma once

#include <vector>

#include "widthlab/body.hpp"
#include "widthlab/grid.hpp"

namespace widthlab {

/// Chebyshev (minimal enclosing) ball of a body.
struct ChebyshevData {
  Vec center;
  double radius = 0.0;
  /// Directions u with h_Y(u) - <center, u> = radius within tolerance.
  std::vector<Vec> active_dirs;
};

struct ChebyshevOptions {
  /// Outer refinement rounds before MaxIterations is raised.
  int max_iterations = 100;
  /// Stop once the farthest point of the body is within tol * (1 + R).
  /// Near a two-point contact the center moves like sqrt(gap * R), so this
  /// is kept close to rounding level.
  double tol = 1e-13;
  /// Grid directions, by residual, that get a local search per round.
  int refine_count = 64;
  /// Relative band for reporting active directions.
  double active_tol = 1e-6;
};

/// Smallest ball containing a finite point set (move-to-front Welzl with an
/// affine-hull circumsphere basis of at most n + 1 points).
ChebyshevData min_enclosing_ball_points(const std::vector<Vec>& points);

/// Chebyshev ball of an arbitrary body.
///
/// Point hulls and balls are solved exactly. Other bodies are reduced to the
/// farthest-point problem max_u h_Y(u) - <c, u> = max_{y in Y} |y - c|:
/// support points on the grid seed an exact point-set ball, and each round
/// locally maximizes the residual around the highest-residual grid
/// directions and adds the support points found outside the current ball.
/// Throws MaxIterations if the farthest-point gap stays above tol * (1 + R).
ChebyshevData chebyshev(const Body& y, const DirectionGrid& grid,
                        const ChebyshevOptions& options = {});

}  // namespace widthlab

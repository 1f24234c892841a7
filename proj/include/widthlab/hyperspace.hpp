#pragma once

#include <optional>

#include "widthlab/body.hpp"
#include "widthlab/chebyshev.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

/// Ordered pair (Y, Z), optionally certified to have constant relative width.
struct BodyPair {
  Body left;
  Body right;
  std::optional<double> certified_width;
};

/// Measures w_(Y,Z) on the grid and records the width when its spread is
/// within tol * max(1, d). The returned pair is uncertified otherwise.
BodyPair certify_pair(const Body& left, const Body& right, const DirectionGrid& grid,
                      double tol = 1e-7);

/// (d, x) in D x R^n.
struct FiberPoint {
  double width;
  Vec center;
};

struct FiberTolerances {
  double width = 1e-7;
  double center = 1e-5;
};

/// (width, Chebyshev center). Throws NotConstantWidth when the width spread
/// exceeds tol * max(1, d).
FiberPoint eta(const Body& y, const DirectionGrid& grid, double tol = 1e-7,
               const ChebyshevOptions& options = {});

bool same_fiber(const FiberPoint& a, const FiberPoint& b, const FiberTolerances& tol = {});

/// H(A, t) = tA + (1 - t)B with B = Ball(fiber.center, fiber.width / 2).
/// Rejects A whose own eta differs from `fiber`.
Body eta_fiber_homotopy(const Body& a, double t, const FiberPoint& fiber, const DirectionGrid& grid,
                        const FiberTolerances& tol = {});

/// e(Y) = (Y, Y), certified when Y has constant width.
BodyPair embed_pair(const Body& y, const DirectionGrid& grid, double tol = 1e-7);

/// Phi((Y, Z)) = (Y + Z) / 2 for a certified pair.
Body phi(const BodyPair& pair);

/// Componentwise t * P1 + (1 - t) * P2. Both pairs must lie in the same
/// Phi fiber (sup-norm distance of supports <= tol * (1 + d)).
BodyPair phi_fiber_combination(const BodyPair& p1, const BodyPair& p2, double t,
                               const DirectionGrid& grid, double tol = 1e-7);

struct MaeharaReport {
  double relative_width;
  WidthReport sum_report;
  bool holds;
};

/// Width of Y + Z against 2d for a certified pair of relative width d.
MaeharaReport maehara_check(const BodyPair& pair, const DirectionGrid& grid, double mean_tol = 1e-8,
                            double spread_tol = 1e-7);

struct ProperBoundReport {
  std::size_t samples;
  double max_parallelogram_residual;
  double max_norm_left;
  double max_norm_right;
  double max_difference;  // max |y - z|, expected <= d
  double max_sum;         // max |y + z|, expected <= 2M
  bool holds;
};

/// Checks the containment argument for a certified pair with width d <= M
/// and (Y + Z)/2 inside B(0, M): on sampled boundary points y, z the
/// parallelogram identity holds and |y|, |z| < 2M. Throws InvalidArgument
/// ("InvalidBound") when the preconditions fail.
ProperBoundReport properness_bound_check(const BodyPair& pair, double bound, const DirectionGrid& grid,
                                         std::size_t samples = 256, double tol = 1e-9);

}  // namespace widthlab

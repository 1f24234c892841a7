#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "widthlab/body.hpp"

namespace widthlab {

/// Reuleaux triangle: discs of radius d centered at pose((0,0)), pose((d,0))
/// and pose((d/2, d*sqrt(3)/2)). A pose with ratio lambda yields width
/// lambda * d.
Body reuleaux_triangle(double d, const Similarity& pose = Similarity::identity(2));

/// K rotated about the origin by j*pi/(3l), j = 0..l-1.
std::vector<Body> rotated_family(double d, int l);

/// Reuleaux k-gon of width d (k odd >= 3): discs of radius d at the vertices
/// of a regular k-gon centered at the origin with a vertex on the positive
/// y axis, then moved by `pose`.
Body reuleaux_polygon(double d, int k, const Similarity& pose = Similarity::identity(2));

/// Circumradius of the regular k-gon whose vertex-to-opposite-vertex
/// distance is d.
double reuleaux_circumradius(double d, int k);

/// One term of a planar constant-width mixture.
struct ReuleauxComponent {
  int k;
  double angle;
  Vec offset;
};

/// sum_i w_i * Reuleaux(k_i) + w_ball * Ball(0, d/2) with weights normalized
/// to sum 1. `weights` holds one entry per component followed by the ball
/// weight.
Body cw_mixture_2d(double d, const std::vector<ReuleauxComponent>& components,
                   const std::vector<double>& weights);

/// Seeded convex combination of m Reuleaux polygons (k in {3,5,7}, random
/// rotation and placement) and Ball(0, d/2); constant width d.
Body random_cw_body_2d(std::uint64_t seed, double d, int m);

/// Intersection of four balls of radius r centered at the vertices of a
/// regular tetrahedron with edge r. Vertex 0 sits at the origin and
/// vertex 3 above the base triangle in the x-y plane.
Body tetra_ball_body(double r);
std::vector<Vec> tetra_vertices(double edge);

struct Interval1D {
  double lo;
  double hi;
};

struct Cw1Coords {
  double d;
  double mid;
};

/// [x, y] -> (y - x, (x + y) / 2)
Cw1Coords cw1_forward(const Interval1D& interval);
/// (d, mid) -> [mid - d/2, mid + d/2]
Interval1D cw1_inverse(double d, double mid);

struct PairParams1D {
  double d;
  double a;
  double p;
};

using IntervalPair = std::pair<Interval1D, Interval1D>;

/// ([x, y], [v, z]) -> ((z - x, y - x), (x + y) / 2) for pairs with
/// z - x = y - v.
PairParams1D crw1_forward(const IntervalPair& pair, double tol = 1e-12);
/// ((d, a), p) -> ([p - a/2, p + a/2], [p - (d - a/2), p + (d - a/2)]),
/// 0 <= a <= 2d.
IntervalPair crw1_inverse(const PairParams1D& params);

}  // namespace widthlab

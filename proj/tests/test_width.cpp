#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "widthlab/constructions.hpp"
#include "widthlab/width.hpp"

using namespace widthlab;
using std::numbers::pi;

TEST_CASE("width range membership") {
  const WidthRange open = WidthRange::positive();
  CHECK_FALSE(open.contains(0.0));
  CHECK(open.contains(1e-300));
  CHECK(open.contains(1e300));
  CHECK(WidthRange::all().contains(0.0));
  CHECK(WidthRange::singleton(0.0).is_zero_only());
  CHECK(WidthRange::singleton(2.0).contains(2.0));
  CHECK_FALSE(WidthRange::singleton(2.0).contains(2.0 + 1e-12));
  const WidthRange half_open(1.0, 2.0, true, false);
  CHECK(half_open.contains(1.0));
  CHECK_FALSE(half_open.contains(2.0));
  CHECK(WidthRange(1.0, 1.0, true, false).is_empty());
  CHECK_THROWS_AS(WidthRange(2.0, 1.0, true, true), InvalidArgument);
  CHECK_THROWS_AS(WidthRange(-1.0, 1.0, true, true), InvalidArgument);
}

TEST_CASE("width and relative width: worked values") {
  const Vec up = vec({0, 1});
  CHECK(width(Body::ball(vec({3, 4}), 0.75), unit_angle(1.0)) == doctest::Approx(1.5));
  CHECK(width(reuleaux_triangle(1.0), up) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(width(Body::point_hull({vec({0, 0}), vec({1, 0})}), up) == 0.0);

  const DirectionGrid g(2, 128);
  const Body unit = Body::ball(vec({0, 0}), 1.0);
  const Body origin = Body::point(vec({0, 0}));
  const Body k = reuleaux_triangle(0.8);
  const Vec a = vec({0.3, -0.2}), b = vec({-1, 2});
  for (const auto& u : g.directions()) {
    CHECK(relative_width(unit, origin, u) == doctest::Approx(1.0));
    CHECK(relative_width(k, k, u) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(relative_width(Body::ball(a, 0.5), Body::ball(b, 0.25), u) == doctest::Approx(0.75 + (a - b).dot(u)));
  }
  CHECK_THROWS_AS(relative_width(unit, Body::ball(vec({0, 0, 0}), 1), up), DimensionMismatch);
}

TEST_CASE("width_report") {
  const DirectionGrid g(2, 4096);
  const WidthReport ball = width_report(Body::ball(vec({1, 1}), 0.6), g);
  CHECK(ball.min_width == doctest::Approx(1.2));
  CHECK(ball.max_width == doctest::Approx(1.2));
  CHECK(ball.spread <= 1e-15);

  for (double d : {0.5, 1.0, 3.0}) {
    const WidthReport k = width_report(reuleaux_triangle(d), g);
    CHECK(k.spread <= 1e-9 * d);
    CHECK(k.min_width <= k.mean_width);
    CHECK(k.mean_width <= k.max_width);
  }

  // Segment: width is |<(1,0), u>|, maximal along the segment.
  const WidthReport seg = width_report(Body::point_hull({vec({0, 0}), vec({1, 0})}), g);
  CHECK(seg.max_width == doctest::Approx(1.0));
  CHECK(seg.min_width <= 1e-12);
  CHECK(std::abs(seg.witness_dir_max[0]) == doctest::Approx(1.0));
}

TEST_CASE("classify_constant_width") {
  const DirectionGrid g(2, 2048);
  const WidthVerdict ball = classify_constant_width(Body::ball(vec({0, 0}), 1), g, WidthRange::positive());
  REQUIRE(std::holds_alternative<InCwD>(ball));
  CHECK(std::get<InCwD>(ball).width == doctest::Approx(2.0));

  const WidthVerdict k = classify_constant_width(reuleaux_triangle(1.0), g, WidthRange::closed(2, 3));
  REQUIRE(std::holds_alternative<ConstantButOutsideD>(k));
  CHECK(std::get<ConstantButOutsideD>(k).width == doctest::Approx(1.0));

  // Triangle (0,0), (2,0), (0.5,1): the brute-force sweep below gives the spread.
  const std::vector<Vec> tri{vec({0, 0}), vec({2, 0}), vec({0.5, 1})};
  double lo = 1e300, hi = 0;
  for (std::size_t i = 0; i < g.half_size(); ++i) {
    double mx = -1e300, mn = 1e300;
    for (const auto& p : tri) {
      mx = std::max(mx, p.dot(g[i]));
      mn = std::min(mn, p.dot(g[i]));
    }
    lo = std::min(lo, mx - mn);
    hi = std::max(hi, mx - mn);
  }
  const WidthVerdict t = classify_constant_width(Body::point_hull(tri), g, WidthRange::all());
  REQUIRE(std::holds_alternative<NotConstant>(t));
  CHECK(std::get<NotConstant>(t).spread == doctest::Approx(hi - lo).epsilon(1e-12));
  CHECK(std::get<NotConstant>(t).spread > 0.5);

  CHECK_THROWS_AS(classify_constant_width(reuleaux_triangle(1.0), g, WidthRange::all(), 0.0), InvalidArgument);
}

TEST_CASE("hausdorff") {
  const DirectionGrid g(2, 1024);
  CHECK(hausdorff(Body::ball(vec({0, 0}), 1), Body::ball(vec({0, 0}), 2), g) == doctest::Approx(1.0));
  CHECK(hausdorff(Body::ball(vec({0, 0}), 1), Body::point(vec({0, 0})), g) == doctest::Approx(1.0));

  const Body k = reuleaux_triangle(1.0);
  const Body rotated = apply_similarity(Similarity::rotation2d(pi / 3), k);
  double brute = 0.0;
  for (const auto& u : g.directions()) brute = std::max(brute, std::abs(k.support(u) - rotated.support(u)));
  const double h = hausdorff(k, rotated, g);
  CHECK(h > 0.1);
  CHECK(std::abs(h - brute) <= 1e-9);
  CHECK(h == sup_distance(sample_support(k, g), sample_support(rotated, g)));

  CHECK_THROWS_AS(hausdorff(k, Body::ball(vec({0, 0, 0}), 1), g), DimensionMismatch);
}

TEST_CASE("diameter") {
  const DirectionGrid g(2, 4096);
  CHECK(diameter(Body::ball(vec({5, 5}), 1.25), g) == 2.5);
  CHECK(diameter(Body::point_hull({vec({0, 0}), vec({3, 4})}), g) == 5.0);
  CHECK(std::abs(diameter(reuleaux_triangle(1.0), g) - 1.0) <= 1e-9);
  // max width agrees with the pairwise diameter on a point hull
  const std::vector<Vec> pts{vec({0, 0}), vec({2, 0.1}), vec({0.4, 1.3}), vec({-0.3, 0.8})};
  const Body hull = Body::point_hull(pts);
  const Body wrapped = minkowski({{1.0, hull}});
  CHECK(std::abs(diameter(wrapped, g) - diameter(hull, g)) <= 1e-5);
}

TEST_CASE("width is affine under Minkowski combination of constant-width bodies") {
  const DirectionGrid g(2, 2048);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const double dy = 0.5 + uni(rng), dz = 0.5 + 2 * uni(rng), t = uni(rng);
    const Body y = random_cw_body_2d(trial, dy, 2);
    const Body z = random_cw_body_2d(1000 + trial, dz, 3);
    const WidthReport r = width_report(minkowski({{t, y}, {1 - t, z}}), g);
    CHECK(r.spread <= 1e-7);
    CHECK(std::abs(r.mean_width - (t * dy + (1 - t) * dz)) <= 1e-8);
  }
}

TEST_CASE("constant width iff Y - Y is a ball") {
  const DirectionGrid g(2, 2048);
  const double tol = 1e-7;
  const std::vector<Body> bodies{reuleaux_triangle(1.0), random_cw_body_2d(3, 2.0, 2),
                                 Body::point_hull({vec({0, 0}), vec({1, 0}), vec({0, 1})}),
                                 Body::ball_intersection({vec({0, 0}), vec({1.2, 0})}, {1.0, 1.0})};
  for (const Body& y : bodies) {
    const WidthReport r = width_report(y, g);
    const Body diff = minkowski({{1, y}, {1, reflect(y)}});
    const bool constant = r.spread <= tol;
    const bool is_ball = hausdorff(diff, Body::ball(vec({0, 0}), r.mean_width), g) <= tol;
    CHECK(constant == is_ball);
  }
}

TEST_CASE("convex combinations stay in cw_D") {
  const DirectionGrid g(2, 2048);
  const WidthRange range = WidthRange::closed(1.0, 2.0);
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> uni(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const double d1 = 1 + uni(rng), d2 = 1 + uni(rng), t = uni(rng);
    const Body y = random_cw_body_2d(40 + trial, d1, 2);
    const Body z = reuleaux_polygon(d2, 5);
    REQUIRE(std::holds_alternative<InCwD>(classify_constant_width(y, g, range)));
    REQUIRE(std::holds_alternative<InCwD>(classify_constant_width(z, g, range)));
    CHECK(std::holds_alternative<InCwD>(classify_constant_width(minkowski({{t, y}, {1 - t, z}}), g, range)));
  }
}

TEST_CASE("constant relative width is preserved by convex combinations of pairs") {
  const DirectionGrid g(2, 1024);
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> uni(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    // (B(x, r), {x}) has relative width r; (K, K) has relative width d.
    const double r = 0.5 + uni(rng), d = 0.5 + uni(rng), t = uni(rng);
    const Vec x = vec({uni(rng), uni(rng)});
    const Body k = random_cw_body_2d(trial, d, 2);
    const Body left = minkowski({{t, Body::ball(x, r)}, {1 - t, k}});
    const Body right = minkowski({{t, Body::point(x)}, {1 - t, k}});
    for (const auto& u : g.directions())
      CHECK(std::abs(relative_width(left, right, u) - (t * r + (1 - t) * d)) <= 1e-8);
  }
}

TEST_CASE("limits of constant-width sequences keep small spread") {
  // Y_i = (1 - 1/i) K + (1/i) B converges to K; spreads stay within tol.
  const DirectionGrid g(2, 2048);
  const Body k = reuleaux_polygon(1.0, 7);
  const Body b = Body::ball(vec({0, 0}), 0.5);
  double limsup = 0.0, last_distance = 1.0;
  for (int i = 1; i <= 64; i *= 2) {
    const double s = 1.0 / i;
    const Body yi = minkowski({{1 - s, k}, {s, b}});
    limsup = std::max(limsup, width_report(yi, g).spread);
    const double dist = hausdorff(yi, k, g);
    CHECK(dist <= last_distance + 1e-15);
    last_distance = dist;
  }
  CHECK(width_report(k, g).spread <= limsup + 1e-7);
}

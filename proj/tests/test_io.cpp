#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "widthlab/constructions.hpp"
#include "widthlab/io.hpp"

using namespace widthlab;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("widthlab_test_" + name)).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string schema_pointer(const Json& j) {
  try {
    body_from_json(j);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-1.5) == "-1.5");
  const double x = 1.0 / 3.0;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("dump_json is compact, sorted and exact") {
  CHECK(dump_json(Json{{"mid", 1.0}, {"d", 2.0}}) == R"({"d":2,"mid":1})");
  CHECK(dump_json(Json{{"x", std::numeric_limits<double>::infinity()}}) == R"({"x":null})");
  CHECK(dump_json(Json::array({0.1, 3})) == "[0.1,3]");
}

TEST_CASE("ball round trip is byte-identical") {
  const Body b = Body::ball(vec({0.25, -3}), 1.5);
  const std::string path = temp_path("ball.json");
  save_body(b, path);
  const std::string first = read_file(path);
  save_body(load_body(path), path);
  CHECK(read_file(path) == first);
  CHECK(dump_json(body_to_json(b)) == R"({"dim":2,"expr":{"center":[0.25,-3],"kind":"ball","radius":1.5}})");
  std::filesystem::remove(path);
}

TEST_CASE("every body kind survives a round trip") {
  const DirectionGrid g(2, 512);
  const Body k = reuleaux_triangle(1.0);
  const std::vector<Body> bodies{
      k,
      Body::point_hull({vec({0, 0}), vec({1, 2}), vec({-1, 0.5})}),
      random_cw_body_2d(4, 1.0, 3),
      reflect(k),
      apply_similarity(Similarity(vec({1, 2}), 0.5, Similarity::rotation2d(0.3).rotation()), k),
  };
  for (const auto& y : bodies) {
    const Body back = body_from_json(Json::parse(dump_json(body_to_json(y))));
    for (const auto& u : g.directions()) CHECK(back.support(u) == y.support(u));
  }
  const Body t = tetra_ball_body(1.0);
  const Body t2 = body_from_json(body_to_json(t));
  const DirectionGrid g3(3, 200);
  for (const auto& u : g3.directions()) CHECK(t2.support(u) == t.support(u));
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(schema_pointer(Json::parse(R"({"dim":2,"expr":{"kind":"ball","center":[0,0],"radius":-1}})")) ==
        "/expr/radius");
  CHECK(schema_pointer(Json::parse(R"({"dim":2,"expr":{"kind":"blob"}})")) == "/expr/kind");
  CHECK(schema_pointer(Json::parse(R"({"expr":{"kind":"ball","center":[0,0],"radius":1}})")) == "/dim");
  CHECK(schema_pointer(Json::parse(R"({"dim":2,"expr":{"kind":"ball","center":[0,0,0],"radius":1}})")) ==
        "/expr/center");
  CHECK(schema_pointer(Json::parse(
            R"({"dim":2,"expr":{"kind":"mink_comb","terms":[{"coef":-1,"expr":{"kind":"ball","center":[0,0],"radius":1}}]}})")) ==
        "/expr/terms/0/coef");
  CHECK_THROWS_AS(load_body(temp_path("does_not_exist.json")), Error);
}

TEST_CASE("grid and report serialization") {
  const DirectionGrid g = grid_from_json(grid_to_json(DirectionGrid(3, 100)));
  CHECK(g.dim() == 3);
  CHECK(g.size() == 100);
  const Json r = to_json(width_report(Body::ball(vec({0, 0}), 1), DirectionGrid(2, 16)));
  CHECK(r.at("spread").get<double>() == 0.0);
  CHECK(r.at("mean").get<double>() == 2.0);
}

TEST_CASE("csv writers") {
  std::ostringstream profile;
  write_width_profile_csv(profile, Body::ball(vec({0, 0}), 1), DirectionGrid(2, 4));
  CHECK(profile.str().rfind("theta_or_index,h(u),h(-u),w(u)\n", 0) == 0);
  const std::string p = profile.str();
  CHECK(std::count(p.begin(), p.end(), '\n') == 5);

  std::ostringstream sweep;
  write_width_sweep_csv(sweep, Body::ball(vec({0, 0, 0}), 1), DirectionGrid(3, 10));
  CHECK(sweep.str().rfind("dir_index,u0,u1,u2,w(u)\n", 0) == 0);
  const std::string s = sweep.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 6);
}

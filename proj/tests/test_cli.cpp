#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "widthlab/cli.hpp"
#include "widthlab/io.hpp"

using namespace widthlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("widthlab_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kBall = R"({"dim":2,"expr":{"kind":"ball","center":[0,0],"radius":1}})";
const std::string kTriangle =
    R"({"dim":2,"expr":{"kind":"point_hull","points":[[0,0],[2,0],[0.5,1]]}})";

}  // namespace

TEST_CASE("cli width-check") {
  const std::string ball = write_temp("ball.json", kBall);
  const Result r = invoke({"width-check", "--body", ball, "--grid", "4096"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("spread").get<double>() == 0.0);
  CHECK(j.at("mean").get<double>() == 2.0);
  CHECK(j.at("verdict") == "in_cw_d");
  CHECK(r.out == R"({"argmax_dir":[1,0],"argmin_dir":[1,0],"grid":4096,"max":2,"mean":2,"min":2,"spread":0,"verdict":"in_cw_d"})" "\n");

  const std::string tri = write_temp("tri.json", kTriangle);
  const Result bad = invoke({"width-check", "--body", tri, "--expect-constant"});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).at("verdict") == "not_constant_width");
  CHECK(!bad.err.empty());
  CHECK(invoke({"width-check", "--body", tri}).code == 0);

  const Result outside = invoke({"width-check", "--body", ball, "--range-lo", "3", "--range-hi", "4", "--expect-constant"});
  CHECK(outside.code == 1);
  CHECK(Json::parse(outside.out).at("verdict") == "constant_outside_d");

  const Result csv = invoke({"width-check", "--body", ball, "--grid", "8", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("theta_or_index,h(u),h(-u),w(u)\n", 0) == 0);
}

TEST_CASE("cli gram-rank") {
  const Result r = invoke({"gram-rank", "--l", "8", "--grid", "4096"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("numerical_rank") == 8);
  const Result csv = invoke({"gram-rank", "--l", "3", "--grid", "1024", "--format", "csv"});
  CHECK(csv.out.rfind("index,sigma\n", 0) == 0);
  CHECK(invoke({"gram-rank"}).code == 2);
}

TEST_CASE("cli dim1") {
  CHECK(invoke({"dim1", "--forward", "--interval", "0", "2"}).out == "{\"d\":2,\"mid\":1}\n");
  CHECK(invoke({"dim1", "--inverse", "--d", "2", "--mid", "1"}).out == "{\"hi\":2,\"lo\":0}\n");
  CHECK(invoke({"dim1", "--pair-forward", "--intervals", "-1", "1", "-1", "1"}).out ==
        "{\"a\":2,\"d\":2,\"p\":0}\n");
  CHECK(invoke({"dim1", "--pair-inverse", "--d", "1", "--a", "0", "--p", "0"}).out ==
        "{\"first\":[0,0],\"second\":[-1,1]}\n");
  const Result bad = invoke({"dim1", "--pair-inverse", "--d", "1", "--a", "3", "--p", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find('\n') == bad.err.size() - 1);
  CHECK(invoke({"dim1", "--inverse", "--d", "-1", "--mid", "0"}).code == 2);
}

TEST_CASE("cli reuleaux, chebyshev, hausdorff") {
  const std::string out = (std::filesystem::temp_directory_path() / "widthlab_cli_k.json").string();
  CHECK(invoke({"reuleaux", "--d", "1", "--out", out}).code == 0);
  const Result check = invoke({"width-check", "--body", out, "--expect-constant"});
  CHECK(check.code == 0);
  CHECK(Json::parse(check.out).at("spread").get<double>() <= 1e-9);

  const Result cheb = invoke({"chebyshev", "--body", out});
  CHECK(cheb.code == 0);
  const Json cj = Json::parse(cheb.out);
  CHECK(cj.at("radius").get<double>() == doctest::Approx(0.5773502691896258).epsilon(1e-9));

  const std::string ball = write_temp("ball.json", kBall);
  const Result h = invoke({"hausdorff", "--a", ball, "--b", ball});
  CHECK(Json::parse(h.out).at("hausdorff").get<double>() == 0.0);

  const Result golden = invoke({"reuleaux", "--d", "1", "--golden", "8"});
  CHECK(golden.code == 0);
  CHECK(golden.out.rfind("t,h\n", 0) == 0);
}

TEST_CASE("cli tetra-sweep, homotopy-trace, pair-sum") {
  const Result t = invoke({"tetra-sweep", "--r", "1", "--grid", "20000"});
  CHECK(t.code == 0);
  const Json tj = Json::parse(t.out);
  CHECK(tj.at("ratio").get<double>() > 1.01);
  CHECK(tj.at("gap_detected") == true);

  const std::string ball = write_temp("ball.json", kBall);
  const Result trace = invoke({"homotopy-trace", "--body", ball, "--steps", "3"});
  CHECK(trace.code == 0);
  CHECK(trace.out.rfind("t,width_mean,width_spread,center_x0,center_x1,hausdorff_to_ball\n", 0) == 0);

  const Result sum = invoke({"pair-sum", "--left", ball, "--right", ball});
  CHECK(sum.code == 0);
  CHECK(Json::parse(sum.out).at("holds") == true);
  const std::string tri = write_temp("tri.json", kTriangle);
  CHECK(invoke({"pair-sum", "--left", tri, "--right", ball}).code == 1);
}

TEST_CASE("cli errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"width-check"}).code == 2);
  CHECK(invoke({"width-check", "--body", "/nonexistent/body.json"}).code == 2);
  const std::string bad = write_temp("bad.json", R"({"dim":2,"expr":{"kind":"ball","center":[0,0],"radius":-1}})");
  const Result r = invoke({"width-check", "--body", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("/expr/radius") != std::string::npos);
  CHECK(invoke({"width-check", "--body", bad, "--format", "xml"}).code == 2);
  CHECK(invoke({"width-check", "--body", bad, "--grid", "7"}).code == 2);
}

#include "widthlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace widthlab {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0.0) return "0";  // drops the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

void dump_into(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

[[noreturn]] void fail(const std::string& ptr, const std::string& what) { throw SchemaError(ptr, what); }

const Json& field(const Json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& ptr) {
  if (!j.is_number()) fail(ptr, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(ptr, "expected a finite number");
  return x;
}

Vec vector_at(const Json& j, const std::string& ptr, int dim) {
  if (!j.is_array() || j.empty()) fail(ptr, "expected a nonempty array of numbers");
  if (dim > 0 && static_cast<int>(j.size()) != dim)
    fail(ptr, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], ptr + "/" + std::to_string(i));
  return v;
}

const Json& array_at(const Json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) fail(ptr, "expected a nonempty array");
  return j;
}

Body expr_from_json(const Json& j, const std::string& ptr, int dim) {
  const Json& kind_j = field(j, ptr, "kind");
  if (!kind_j.is_string()) fail(ptr + "/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "point_hull") {
    const std::string pp = ptr + "/points";
    const Json& pts = array_at(field(j, ptr, "points"), pp);
    std::vector<Vec> points;
    for (std::size_t i = 0; i < pts.size(); ++i) points.push_back(vector_at(pts[i], pp + "/" + std::to_string(i), dim));
    return Body::point_hull(std::move(points));
  }
  if (kind == "ball") {
    const Vec c = vector_at(field(j, ptr, "center"), ptr + "/center", dim);
    const double r = number(field(j, ptr, "radius"), ptr + "/radius");
    if (r < 0) fail(ptr + "/radius", "radius must be nonnegative");
    return Body::ball(c, r);
  }
  if (kind == "ball_intersection") {
    const std::string cp = ptr + "/centers", rp = ptr + "/radii";
    const Json& cs = array_at(field(j, ptr, "centers"), cp);
    const Json& rs = array_at(field(j, ptr, "radii"), rp);
    if (cs.size() != rs.size()) fail(rp, "radii and centers differ in length");
    std::vector<Vec> centers;
    std::vector<double> radii;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      centers.push_back(vector_at(cs[i], cp + "/" + std::to_string(i), dim));
      const double r = number(rs[i], rp + "/" + std::to_string(i));
      if (r <= 0) fail(rp + "/" + std::to_string(i), "radius must be positive");
      radii.push_back(r);
    }
    try {
      return Body::ball_intersection(std::move(centers), std::move(radii));
    } catch (const InvalidArgument& e) {
      fail(ptr, e.what());
    } catch (const Unsupported& e) {
      fail(ptr, e.what());
    }
  }
  if (kind == "mink_comb") {
    const std::string tp = ptr + "/terms";
    const Json& ts = array_at(field(j, ptr, "terms"), tp);
    std::vector<std::pair<double, Body>> terms;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string ip = tp + "/" + std::to_string(i);
      const double coef = number(field(ts[i], ip, "coef"), ip + "/coef");
      if (coef < 0) fail(ip + "/coef", "coefficient must be nonnegative");
      terms.emplace_back(coef, expr_from_json(field(ts[i], ip, "expr"), ip + "/expr", dim));
    }
    return minkowski(terms);
  }
  if (kind == "sim_image") {
    const Vec v = vector_at(field(j, ptr, "translation"), ptr + "/translation", dim);
    const double ratio = number(field(j, ptr, "ratio"), ptr + "/ratio");
    if (ratio <= 0) fail(ptr + "/ratio", "ratio must be positive");
    const std::string rp = ptr + "/rotation";
    const Json& rows = field(j, ptr, "rotation");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) fail(rp, "expected an n x n array");
    Mat rot(dim, dim);
    for (int i = 0; i < dim; ++i) rot.row(i) = vector_at(rows[static_cast<std::size_t>(i)], rp + "/" + std::to_string(i), dim).transpose();
    try {
      return apply_similarity(Similarity(v, ratio, rot), expr_from_json(field(j, ptr, "inner"), ptr + "/inner", dim));
    } catch (const SchemaError&) {
      throw;
    } catch (const InvalidArgument& e) {
      fail(rp, e.what());
    }
  }
  if (kind == "reflected") return reflect(expr_from_json(field(j, ptr, "inner"), ptr + "/inner", dim));
  fail(ptr + "/kind", "unknown body kind '" + kind + "'");
}

Json expr_to_json(const Body& body) {
  const BodyExpr& e = body.expr();
  if (const auto* ph = std::get_if<PointHull>(&e)) {
    Json pts = Json::array();
    for (const auto& p : ph->points) pts.push_back(vec_to_json(p));
    return {{"kind", "point_hull"}, {"points", pts}};
  }
  if (const auto* b = std::get_if<Ball>(&e)) return {{"kind", "ball"}, {"center", vec_to_json(b->center)}, {"radius", b->radius}};
  if (const auto* bi = std::get_if<BallIntersection>(&e)) {
    Json cs = Json::array();
    for (const auto& c : bi->centers) cs.push_back(vec_to_json(c));
    return {{"kind", "ball_intersection"}, {"centers", cs}, {"radii", bi->radii}};
  }
  if (const auto* mc = std::get_if<MinkComb>(&e)) {
    Json ts = Json::array();
    for (const auto& t : mc->terms) ts.push_back({{"coef", t.coef}, {"expr", expr_to_json(t.body)}});
    return {{"kind", "mink_comb"}, {"terms", ts}};
  }
  if (const auto* si = std::get_if<SimImage>(&e)) {
    Json rows = Json::array();
    for (int i = 0; i < si->map.dim(); ++i) rows.push_back(vec_to_json(si->map.rotation().row(i).transpose()));
    return {{"kind", "sim_image"},
            {"translation", vec_to_json(si->map.translation())},
            {"ratio", si->map.ratio()},
            {"rotation", rows},
            {"inner", expr_to_json(si->inner)}};
  }
  const auto& r = std::get<Reflected>(e);
  return {{"kind", "reflected"}, {"inner", expr_to_json(r.inner)}};
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(out, j);
  return out;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json body_to_json(const Body& body) { return {{"dim", body.dim()}, {"expr", expr_to_json(body)}}; }

Body body_from_json(const Json& j) {
  const Json& dim_j = field(j, "", "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) fail("/dim", "expected an integer >= 1");
  const int dim = dim_j.get<int>();
  try {
    return expr_from_json(field(j, "", "expr"), "/expr", dim);
  } catch (const DimensionMismatch& e) {
    fail("/expr", e.what());
  }
}

Body load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open body file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  return body_from_json(j);
}

void save_body(const Body& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write body file '" + path + "'");
  out << dump_json(body_to_json(body)) << '\n';
}

Json grid_to_json(const DirectionGrid& grid) { return {{"dim", grid.dim()}, {"count", grid.size()}}; }

DirectionGrid grid_from_json(const Json& j) {
  const Json& d = field(j, "", "dim");
  const Json& c = field(j, "", "count");
  if (!d.is_number_integer() || d.get<long long>() < 1) fail("/dim", "expected an integer >= 1");
  if (!c.is_number_integer() || c.get<long long>() < 2) fail("/count", "expected an even integer >= 2");
  try {
    return DirectionGrid(d.get<int>(), c.get<std::size_t>());
  } catch (const InvalidArgument& e) {
    fail("/count", e.what());
  }
}

Json to_json(const WidthReport& r) {
  return {{"min", r.min_width},
          {"max", r.max_width},
          {"spread", r.spread},
          {"mean", r.mean_width},
          {"argmin_dir", vec_to_json(r.witness_dir_min)},
          {"argmax_dir", vec_to_json(r.witness_dir_max)}};
}

Json to_json(const ChebyshevData& c) {
  return {{"center", vec_to_json(c.center)}, {"radius", c.radius}, {"active_count", c.active_dirs.size()}};
}

Json to_json(const GramReport& g) {
  return {{"l", g.l}, {"numerical_rank", g.numerical_rank}, {"threshold", g.threshold}, {"singular_values", g.singular_values}};
}

void write_width_profile_csv(std::ostream& out, const Body& body, const DirectionGrid& grid) {
  require_dim(body.dim(), grid.dim());
  out << "theta_or_index,h(u),h(-u),w(u)\n";
  const SupportSample s = sample_support(body, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double hu = s.values[k], hm = s.values[grid.antipode(k)];
    const std::string first = grid.dim() == 2 ? format_double(grid.angle(k)) : std::to_string(k);
    out << first << ',' << format_double(hu) << ',' << format_double(hm) << ',' << format_double(hu + hm) << '\n';
  }
}

void write_width_sweep_csv(std::ostream& out, const Body& body, const DirectionGrid& grid) {
  require_dim(body.dim(), grid.dim());
  out << "dir_index";
  for (int i = 0; i < grid.dim(); ++i) out << ",u" << i;
  out << ",w(u)\n";
  for (std::size_t k = 0; k < grid.half_size(); ++k) {
    out << k;
    for (int i = 0; i < grid.dim(); ++i) out << ',' << format_double(grid[k][i]);
    out << ',' << format_double(body.support_unchecked(grid[k]) + body.support_unchecked(grid[grid.antipode(k)])) << '\n';
  }
}

void write_singular_values_csv(std::ostream& out, const GramReport& g) {
  out << "index,sigma\n";
  for (std::size_t i = 0; i < g.singular_values.size(); ++i) out << i << ',' << format_double(g.singular_values[i]) << '\n';
}

}  // namespace widthlab

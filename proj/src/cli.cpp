#include "widthlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "widthlab/chebyshev.hpp"
#include "widthlab/constructions.hpp"
#include "widthlab/experiments.hpp"
#include "widthlab/hyperspace.hpp"
#include "widthlab/io.hpp"

namespace widthlab::cli {

namespace {

struct CheckFailed : Error {
  using Error::Error;
};

std::size_t grid_size_for(const RunConfig& cfg, int dim) {
  if (cfg.grid_n > 0) return static_cast<std::size_t>(cfg.grid_n);
  return dim == 3 ? 20000 : 4096;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid_n != 0 && (cfg.grid_n < 8 || cfg.grid_n % 2 != 0))
    throw InvalidArgument("--grid must be even and >= 8");
  if (!(cfg.tol_abs > 0.0) || !(cfg.tol_rel > 0.0)) throw InvalidArgument("tolerances must be positive");
  if (cfg.iteration_budget < 1) throw InvalidArgument("--max-iter must be >= 1");
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid", cfg.grid_n, "Number of grid directions (even, >= 8)");
  sub->add_option("--tol", cfg.tol_rel, "Relative tolerance");
  sub->add_option("--abs-tol", cfg.tol_abs, "Chebyshev stopping gap, relative to 1 + R");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--format", cfg.output_format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                             {"csv", OutputFormat::Csv}},
                                          CLI::ignore_case));
  sub->add_option("--max-iter", cfg.iteration_budget, "Iteration budget for iterative solvers");
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"widthlab: constant-width bodies via support functions", "widthlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  // width-check
  std::string body_path;
  bool expect_constant = false;
  double range_lo = 0.0, range_hi = WidthRange::kInf;
  bool lo_open = true, hi_open = true;
  auto* width_check = app.add_subcommand("width-check", "Width report and constant-width verdict");
  width_check->add_option("--body", body_path, "Body JSON file")->required();
  width_check->add_flag("--expect-constant", expect_constant, "Exit 1 unless the body is in cw_D");
  width_check->add_option("--range-lo", range_lo, "Lower end of D (default 0, open)");
  width_check->add_option("--range-hi", range_hi, "Upper end of D (default inf)");
  width_check->add_flag("!--lo-closed", lo_open, "Include the lower end");
  width_check->add_flag("!--hi-closed", hi_open, "Include the upper end");
  add_common(width_check, cfg);

  // hausdorff
  std::string path_a, path_b;
  auto* haus = app.add_subcommand("hausdorff", "Sampled Hausdorff distance of two bodies");
  haus->add_option("--a", path_a, "First body JSON file")->required();
  haus->add_option("--b", path_b, "Second body JSON file")->required();
  add_common(haus, cfg);

  // chebyshev
  auto* cheb = app.add_subcommand("chebyshev", "Chebyshev ball of a body");
  cheb->add_option("--body", body_path, "Body JSON file")->required();
  add_common(cheb, cfg);

  // reuleaux
  double d = 1.0, angle = 0.0;
  int k_vertices = 3, golden = 0;
  std::string out_path;
  auto* reul = app.add_subcommand("reuleaux", "Emit a Reuleaux polygon as Body JSON");
  reul->add_option("--d", d, "Width");
  reul->add_option("--k", k_vertices, "Odd vertex count (3 = canonical triangle)");
  reul->add_option("--angle", angle, "Rotation about the origin (radians)");
  reul->add_option("--out", out_path, "Write the body to this file instead of stdout");
  reul->add_option("--golden", golden, "Emit t,h(e^{it}) CSV at this many angles instead");
  add_common(reul, cfg);

  // gram-rank
  int l = 1;
  double threshold = 1e-8;
  auto* gram = app.add_subcommand("gram-rank", "Numerical rank of the rotated Reuleaux family");
  gram->add_option("--l", l, "Family size")->required();
  gram->add_option("--d", d, "Width");
  gram->add_option("--threshold", threshold, "Relative singular value threshold");
  add_common(gram, cfg);

  // tetra-sweep
  double radius = 1.0;
  auto* tetra = app.add_subcommand("tetra-sweep", "Width sweep of the regular-tetrahedron ball intersection");
  tetra->add_option("--r", radius, "Ball radius and tetrahedron edge");
  add_common(tetra, cfg);

  // homotopy-trace
  int steps = 11;
  auto* trace = app.add_subcommand("homotopy-trace", "CSV trace of H(A,t) = tA + (1-t)B");
  trace->add_option("--body", body_path, "Constant-width body JSON file")->required();
  trace->add_option("--steps", steps, "Number of t samples in [0,1] (>= 2)");
  add_common(trace, cfg);

  // pair-sum
  auto* pair_sum = app.add_subcommand("pair-sum", "Certify a pair and check that Y+Z has width 2d");
  pair_sum->add_option("--left", path_a, "Left body JSON file")->required();
  pair_sum->add_option("--right", path_b, "Right body JSON file")->required();
  add_common(pair_sum, cfg);

  // dim1
  bool forward = false, inverse = false, pair_forward = false, pair_inverse = false;
  std::vector<double> interval, intervals;
  double mid = 0.0, a_param = 0.0, p_param = 0.0;
  auto* dim1 = app.add_subcommand("dim1", "One-dimensional coordinate maps");
  auto* g1 = dim1->add_flag("--forward", forward, "[x,y] -> (d, mid)");
  auto* g2 = dim1->add_flag("--inverse", inverse, "(d, mid) -> [x,y]");
  auto* g3 = dim1->add_flag("--pair-forward", pair_forward, "([x,y],[v,z]) -> (d, a, p)");
  auto* g4 = dim1->add_flag("--pair-inverse", pair_inverse, "(d, a, p) -> ([x,y],[v,z])");
  g1->excludes(g2)->excludes(g3)->excludes(g4);
  g2->excludes(g3)->excludes(g4);
  g3->excludes(g4);
  dim1->add_option("--interval", interval, "x y")->expected(2);
  dim1->add_option("--intervals", intervals, "x y v z")->expected(4);
  dim1->add_option("--d", d, "Width");
  dim1->add_option("--mid", mid, "Midpoint");
  dim1->add_option("--a", a_param, "Length of the first interval");
  dim1->add_option("--p", p_param, "Common midpoint");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInvalid;
  }

  try {
    validate(cfg);
    const bool csv = cfg.output_format == OutputFormat::Csv;

    if (width_check->parsed()) {
      const Body body = load_body(body_path);
      const DirectionGrid grid(body.dim(), grid_size_for(cfg, body.dim()));
      if (csv) {
        write_width_profile_csv(out, body, grid);
        return kOk;
      }
      const WidthRange range(range_lo, range_hi, !lo_open, !hi_open);
      const WidthReport rep = width_report(body, grid);
      const WidthVerdict verdict = classify_report(rep, range, cfg.tol_rel);
      Json j = to_json(rep);
      j["verdict"] = verdict_name(verdict);
      j["grid"] = grid.size();
      out << dump_json(j) << '\n';
      if (expect_constant && !std::holds_alternative<InCwD>(verdict))
        throw CheckFailed("body is not in cw_D (" + verdict_name(verdict) + ")");
      return kOk;
    }
    if (haus->parsed()) {
      const Body ya = load_body(path_a), yb = load_body(path_b);
      require_dim(ya.dim(), yb.dim());
      const DirectionGrid grid(ya.dim(), grid_size_for(cfg, ya.dim()));
      out << dump_json(Json{{"hausdorff", hausdorff(ya, yb, grid)}, {"grid", grid.size()}}) << '\n';
      return kOk;
    }
    if (cheb->parsed()) {
      const Body body = load_body(body_path);
      const DirectionGrid grid(body.dim(), grid_size_for(cfg, body.dim()));
      ChebyshevOptions opt;
      opt.max_iterations = cfg.iteration_budget;
      opt.tol = cfg.tol_abs;
      out << dump_json(to_json(chebyshev(body, grid, opt))) << '\n';
      return kOk;
    }
    if (reul->parsed()) {
      const Similarity pose = Similarity::rotation2d(angle);
      const Body body = k_vertices == 3 ? reuleaux_triangle(d, pose) : reuleaux_polygon(d, k_vertices, pose);
      if (golden > 0) {
        out << "t,h\n";
        for (int i = 0; i < golden; ++i) {
          const double t = 2.0 * std::numbers::pi * i / golden;
          out << format_double(t) << ',' << format_double(body.support(unit_angle(t))) << '\n';
        }
        return kOk;
      }
      if (!out_path.empty()) {
        save_body(body, out_path);
        return kOk;
      }
      out << dump_json(body_to_json(body)) << '\n';
      return kOk;
    }
    if (gram->parsed()) {
      const DirectionGrid grid(2, grid_size_for(cfg, 2));
      const GramReport rep = gram_rank(l, d, grid, threshold);
      if (csv)
        write_singular_values_csv(out, rep);
      else
        out << dump_json(to_json(rep)) << '\n';
      return kOk;
    }
    if (tetra->parsed()) {
      const Body body = tetra_ball_body(radius);
      const DirectionGrid grid(3, grid_size_for(cfg, 3));
      if (csv) {
        write_width_sweep_csv(out, body, grid);
        return kOk;
      }
      const SweepReport rep = ball_intersection_width_sweep(body, grid);
      Json j = to_json(rep.widths);
      j["ratio"] = rep.ratio;
      j["gap_detected"] = rep.gap_detected;
      j["grid"] = grid.size();
      out << dump_json(j) << '\n';
      if (rep.gap_expected && !rep.gap_detected) throw CheckFailed("expected a width gap, found none");
      return kOk;
    }
    if (trace->parsed()) {
      if (steps < 2) throw InvalidArgument("--steps must be >= 2");
      const Body body = load_body(body_path);
      const DirectionGrid grid(body.dim(), grid_size_for(cfg, body.dim()));
      ChebyshevOptions opt;
      opt.max_iterations = cfg.iteration_budget;
      opt.tol = cfg.tol_abs;
      const FiberPoint fiber = eta(body, grid, cfg.tol_rel, opt);
      const Body ball = Body::ball(fiber.center, fiber.width / 2.0);
      out << "t,width_mean,width_spread";
      for (int i = 0; i < body.dim(); ++i) out << ",center_x" << i;
      out << ",hausdorff_to_ball\n";
      for (int s = 0; s < steps; ++s) {
        const double t = static_cast<double>(s) / (steps - 1);
        const Body h = minkowski({{t, body}, {1.0 - t, ball}});
        const WidthReport rep = width_report(h, grid);
        const ChebyshevData c = chebyshev(h, grid, opt);
        out << format_double(t) << ',' << format_double(rep.mean_width) << ',' << format_double(rep.spread);
        for (int i = 0; i < body.dim(); ++i) out << ',' << format_double(c.center[i]);
        out << ',' << format_double(hausdorff(h, ball, grid)) << '\n';
      }
      return kOk;
    }
    if (pair_sum->parsed()) {
      const Body left = load_body(path_a), right = load_body(path_b);
      require_dim(left.dim(), right.dim());
      const DirectionGrid grid(left.dim(), grid_size_for(cfg, left.dim()));
      const BodyPair pair = certify_pair(left, right, grid, cfg.tol_rel);
      if (!pair.certified_width) {
        const WidthReport r = relative_width_report(left, right, grid);
        out << dump_json(Json{{"certified", false}, {"relative_spread", r.spread}}) << '\n';
        throw CheckFailed("pair is not of constant relative width");
      }
      const MaeharaReport rep = maehara_check(pair, grid);
      out << dump_json(Json{{"certified", true},
                            {"relative_width", rep.relative_width},
                            {"sum", to_json(rep.sum_report)},
                            {"holds", rep.holds}})
          << '\n';
      if (!rep.holds) throw CheckFailed("Y+Z is not of constant width 2d");
      return kOk;
    }
    if (dim1->parsed()) {
      if (forward) {
        if (interval.size() != 2) throw InvalidArgument("--forward needs --interval x y");
        const Cw1Coords c = cw1_forward({interval[0], interval[1]});
        out << dump_json(Json{{"d", c.d}, {"mid", c.mid}}) << '\n';
      } else if (inverse) {
        const Interval1D i = cw1_inverse(d, mid);
        out << dump_json(Json{{"lo", i.lo}, {"hi", i.hi}}) << '\n';
      } else if (pair_forward) {
        if (intervals.size() != 4) throw InvalidArgument("--pair-forward needs --intervals x y v z");
        const PairParams1D p = crw1_forward({{intervals[0], intervals[1]}, {intervals[2], intervals[3]}});
        out << dump_json(Json{{"d", p.d}, {"a", p.a}, {"p", p.p}}) << '\n';
      } else if (pair_inverse) {
        const IntervalPair ip = crw1_inverse({d, a_param, p_param});
        out << dump_json(Json{{"first", {ip.first.lo, ip.first.hi}}, {"second", {ip.second.lo, ip.second.hi}}}) << '\n';
      } else {
        throw InvalidArgument("dim1 needs one of --forward, --inverse, --pair-forward, --pair-inverse");
      }
      return kOk;
    }
  } catch (const CheckFailed& e) {
    err << "check failed: " << one_line(e.what()) << '\n';
    return kCheckFailed;
  } catch (const MaxIterations& e) {
    err << "check failed: " << one_line(e.what()) << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInvalid;
  }
  err << "error: no subcommand\n";
  return kInvalid;
}

}  // namespace widthlab::cli

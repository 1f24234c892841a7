#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace widthlab::cli {

enum class OutputFormat { Json, Csv };

/// Options shared by every subcommand.
struct RunConfig {
  int grid_n = 0;  // 0: 4096 in 2-D, 20000 in 3-D
  double tol_abs = 1e-13;  // Chebyshev farthest-point gap, relative to 1 + R
  double tol_rel = 1e-7;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::Json;
  int iteration_budget = 100;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalid = 2 };

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out`, a single-line diagnostic to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace widthlab::cli

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arithcomp/ratio_spec.hpp"

namespace arithcomp::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (program name excluded). Everything the binary
/// would print goes to `out` / `err`; files named by --out are written
/// directly. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Plot data for figure 1, 2 or 3 as CSV (or TSV): header row, LF endings.
///   1: n, sigma(phistar(n)), e^gamma n loglog n   for 10 <= n <= 10000
///   2: n, phistar(phi(n)), n                      for 1 <= n <= 10000
///   3: n, sigmastar(phi(n))                       for 1 <= n <= 10000
/// Rows are computed in parallel (0 workers = default) and emitted in order.
/// Throws std::invalid_argument for any other id.
void write_figure(int id, std::ostream& out, char separator = ',', unsigned workers = 0);

/// A limit value known for a ratio shape, e.g. e^gamma for sigma(n)/(n loglog n).
struct KnownLimit {
  std::string constant_name;
  double value = 0.0;
  /// "limsup" or "liminf".
  std::string kind;
};

std::optional<KnownLimit> known_limit(const RatioSpec& spec);

}  // namespace arithcomp::cli

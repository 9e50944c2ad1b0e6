#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arithcomp/cli.hpp"
#include "arithcomp/composition.hpp"
#include "arithcomp/parallel.hpp"
#include "arithcomp/ratio.hpp"
#include "arithcomp/sieve.hpp"

namespace arithcomp::cli {

namespace {

constexpr std::uint64_t kFigureMax = 10000;

struct FigureLayout {
  std::uint64_t from;
  std::vector<std::string> columns;
};

FigureLayout layout(int id) {
  switch (id) {
    case 1: return {10, {"n", "sigma_phistar_n", "egamma_n_loglog_n"}};
    case 2: return {1, {"n", "phistar_phi_n", "n_line"}};
    case 3: return {1, {"n", "sigmastar_phi_n"}};
    default: break;
  }
  throw std::invalid_argument("unknown figure " + std::to_string(id) + " (expected 1, 2 or 3)");
}

}  // namespace

void write_figure(int id, std::ostream& out, char separator, unsigned workers) {
  const FigureLayout fig = layout(id);
  // Every intermediate of these compositions is <= n, so one small sieve covers them.
  const Evaluator ev(std::make_shared<const SieveTable>(kFigureMax));
  const double e_gamma = reference_constants().e_gamma;

  std::vector<std::string> lines(kFigureMax - fig.from + 1);
  run_partitioned(fig.from, kFigureMax, workers == 0 ? default_workers() : workers,
                  [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
                    const std::string sep(1, separator);
                    for (std::uint64_t n = lo; n <= hi; ++n) {
                      std::string line = std::to_string(n) + sep;
                      switch (id) {
                        case 1: {
                          const BigInt v = ev.apply(FunctionId::Sigma, ev.apply(FunctionId::PhiStar, n));
                          const double x = static_cast<double>(n);
                          line += v.str() + sep + format_float(e_gamma * x * std::log(std::log(x)));
                          break;
                        }
                        case 2:
                          line += ev.apply(FunctionId::PhiStar, ev.apply(FunctionId::Phi, n)).str() +
                                  sep + std::to_string(n);
                          break;
                        default:
                          line += ev.apply(FunctionId::SigmaStar, ev.apply(FunctionId::Phi, n)).str();
                          break;
                      }
                      lines[n - fig.from] = std::move(line);
                    }
                  });

  for (std::size_t c = 0; c < fig.columns.size(); ++c) {
    out << (c ? std::string(1, separator) : "") << fig.columns[c];
  }
  out << '\n';
  for (const auto& line : lines) {
    out << line << '\n';
  }
}

}  // namespace arithcomp::cli

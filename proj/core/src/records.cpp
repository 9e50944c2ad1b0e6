#include "arithcomp/ratio.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "arithcomp/errors.hpp"
#include "arithcomp/parallel.hpp"

namespace arithcomp {

namespace {

constexpr std::uint64_t kMaxAutoSieve = 50'000'000;

bool improves(ScanMode mode, double candidate, double incumbent) {
  return mode == ScanMode::Max ? candidate > incumbent : candidate < incumbent;
}

struct ChunkResult {
  std::vector<RecordEntry> entries;
  std::vector<SkippedValue> skipped;
};

}  // namespace

RecordTable scan_records(const RatioSpec& spec, std::uint64_t from, std::uint64_t to,
                         ScanMode mode, const ScanOptions& options) {
  if (from > to) {
    throw std::invalid_argument("empty scan range [" + std::to_string(from) + ", " +
                                std::to_string(to) + "]");
  }
  const bool has_logs = spec.log_exp != 0 || spec.loglog_exp != 0;
  const std::uint64_t minimum = has_logs ? 3 : 1;
  if (from < minimum) {
    throw std::invalid_argument("scan must start at n >= " + std::to_string(minimum) +
                                (has_logs ? " for ratios with log factors" : ""));
  }

  std::uint64_t sieve_limit = options.sieve_limit;
  if (sieve_limit == 0) {
    sieve_limit = std::clamp<std::uint64_t>(to > kMaxAutoSieve / 4 ? kMaxAutoSieve : 4 * to,
                                            1024, kMaxAutoSieve);
  }
  const Evaluator evaluator(std::make_shared<const SieveTable>(sieve_limit, sieve_limit));
  const unsigned workers = options.workers == 0 ? default_workers() : options.workers;

  const auto pieces = partition_range(from, to, workers);
  std::vector<ChunkResult> chunks(pieces.size());
  run_partitioned(from, to, workers, [&](std::size_t index, std::uint64_t lo, std::uint64_t hi) {
    ChunkResult& chunk = chunks[index];
    for (std::uint64_t n = lo; n <= hi; ++n) {
      RatioValue value;
      try {
        value = evaluate_ratio(spec, n, evaluator);
      } catch (const DomainError& e) {
        if (!options.skip_domain_errors) {
          throw;
        }
        chunk.skipped.push_back({n, e.what()});
        continue;
      }
      if (chunk.entries.empty() || improves(mode, value.ratio, chunk.entries.back().ratio)) {
        chunk.entries.push_back(
            {n, std::move(value.numerator), std::move(value.denominator), value.ratio});
      }
    }
  });

  RecordTable table{mode, from, to, {}, {}};
  for (auto& chunk : chunks) {
    for (auto& entry : chunk.entries) {
      if (table.entries.empty() || improves(mode, entry.ratio, table.entries.back().ratio)) {
        table.entries.push_back(std::move(entry));
      }
    }
    std::move(chunk.skipped.begin(), chunk.skipped.end(), std::back_inserter(table.skipped));
  }
  return table;
}

void write_records_csv(std::ostream& out, const RecordTable& table, char separator) {
  out << "n" << separator << "numerator" << separator << "denominator" << separator
      << "ratio\n";
  for (const auto& entry : table.entries) {
    out << entry.n << separator << entry.numerator << separator << entry.denominator
        << separator << format_float(entry.ratio) << '\n';
  }
}

}  // namespace arithcomp

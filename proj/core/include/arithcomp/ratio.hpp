#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arithcomp/ratio_spec.hpp"

namespace arithcomp {

/// Euler's constant and the extremal-order constants built from it. Values
/// were checked against a 40-digit evaluation and are correctly rounded.
struct Constants {
  double gamma;
  double e_gamma;
  double e_neg_gamma;
  double e_2gamma;
  double six_over_pi2;
  double six_over_pi2_e_gamma;
  double six_over_pi2_e_2gamma;
};

constexpr Constants reference_constants() {
  return Constants{
      .gamma = 0.5772156649015329,
      .e_gamma = 1.781072417990198,
      .e_neg_gamma = 0.5614594835668851,
      .e_2gamma = 3.1722189581254505,
      .six_over_pi2 = 0.6079271018540267,
      .six_over_pi2_e_gamma = 1.0827621932609246,
      .six_over_pi2_e_2gamma = 1.928477877659605,
  };
}

struct RatioValue {
  BigInt numerator;
  BigInt denominator;
  double ratio = 0.0;
};

/// Float normalization of exact values: (num/den) * L^log_exp * (ln L)^loglog_exp
/// with L = log_x = ln X.
double normalize_ratio(const BigInt& numerator, const BigInt& denominator, double log_x,
                       int log_exp, int loglog_exp);

/// Exact numerator/denominator values plus the normalized float ratio. Logs
/// of X are summed over X's factorization. Throws DomainError when a log
/// factor with nonzero exponent is undefined or nonpositive (X < 2 for log,
/// X < 3 for loglog).
RatioValue evaluate_ratio(const RatioSpec& spec, const BigInt& n, const Evaluator& evaluator);

double eval_ratio(const RatioSpec& spec, const BigInt& n);

enum class ScanMode { Max, Min };

struct RecordEntry {
  std::uint64_t n = 0;
  BigInt numerator;
  BigInt denominator;
  double ratio = 0.0;

  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct SkippedValue {
  std::uint64_t n = 0;
  std::string reason;

  friend bool operator==(const SkippedValue&, const SkippedValue&) = default;
};

/// Champions of a left-to-right scan: an entry is added only when the ratio
/// strictly improves on every earlier n.
struct RecordTable {
  ScanMode mode = ScanMode::Max;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<RecordEntry> entries;
  std::vector<SkippedValue> skipped;

  friend bool operator==(const RecordTable&, const RecordTable&) = default;
};

struct ScanOptions {
  /// 0 selects default_workers().
  unsigned workers = 0;
  /// Record domain errors in RecordTable::skipped instead of throwing.
  bool skip_domain_errors = false;
  /// Sieve bound for intermediates; 0 picks min(4 * to, 5e7).
  std::uint64_t sieve_limit = 0;
};

/// Throws std::invalid_argument when from > to, or when from < 3 and the
/// spec carries log factors (from >= 1 otherwise). The output is identical
/// for every worker count.
RecordTable scan_records(const RatioSpec& spec, std::uint64_t from, std::uint64_t to,
                         ScanMode mode, const ScanOptions& options = {});

/// Header n,numerator,denominator,ratio; LF endings; ratios at 12 significant
/// digits. `separator` is ',' for CSV and '\t' for TSV.
void write_records_csv(std::ostream& out, const RecordTable& table, char separator = ',');

/// printf("%.12g") formatting shared by every CSV writer.
std::string format_float(double value);

}  // namespace arithcomp

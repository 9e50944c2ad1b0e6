#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arithcomp/functions.hpp"

namespace arithcomp {

struct Violation {
  std::uint64_t n = 0;
  /// Second member of a pair (the multiple t for divisor pairs s | t); 0 otherwise.
  std::uint64_t m = 0;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PropertyReport {
  std::string property;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  /// Counterexample searches succeed when `violations` is non-empty.
  bool counterexample_search = false;
  std::uint64_t cases_checked = 0;
  std::vector<Violation> violations;
  std::chrono::duration<double> wall_time{};

  bool held() const noexcept { return violations.empty(); }
  bool inconclusive() const noexcept { return counterexample_search && violations.empty(); }
  bool success() const noexcept { return counterexample_search != violations.empty(); }
};

enum class DivisorRelation {
  SigmaOverNUp,    // s | t  =>  sigma(s)/s <= sigma(t)/t
  PhiOverNDown,    // s | t  =>  phi(s)/s >= phi(t)/t
  PsiOverNUp,      // s | t  =>  psi(s)/s <= psi(t)/t
  SigmaOverPhiUp,  // s | t  =>  sigma(s)/phi(s) <= sigma(t)/phi(t)
  PsiOverPhiUp,    // s | t  =>  psi(s)/phi(s) <= psi(t)/phi(t)
};

inline constexpr std::array<DivisorRelation, 5> kAllRelations = {
    DivisorRelation::SigmaOverNUp, DivisorRelation::PhiOverNDown, DivisorRelation::PsiOverNUp,
    DivisorRelation::SigmaOverPhiUp, DivisorRelation::PsiOverPhiUp};

/// sigma_over_n_up, phi_over_n_down, psi_over_n_up, sigma_over_phi_up, psi_over_phi_up.
std::string_view relation_name(DivisorRelation relation);
std::optional<DivisorRelation> relation_from_name(std::string_view name);

struct VerifyOptions {
  /// 0 selects default_workers().
  unsigned workers = 0;
};

/// phi(n) <= phistar(n) <= n <= sigmastar(n) <= psi(n) <= sigma(n) for 1 <= n <= limit.
PropertyReport verify_chain(std::uint64_t limit, const VerifyOptions& options = {});

/// Every pair s | t <= limit, compared by exact integer cross-multiplication.
PropertyReport verify_divisor_monotonicity(std::uint64_t limit, DivisorRelation relation,
                                           const VerifyOptions& options = {});

/// Smallest (s, t) in lexicographic order with s | t <= limit and
/// sigmastar(s)/s > sigmastar(t)/t. An empty result is inconclusive.
PropertyReport find_sigma_star_counterexample(std::uint64_t limit);

/// Sieve-path evaluation (spf table, 64-bit formulas) against the direct path
/// (rho factorization, unbounded formulas) for every n <= limit and function.
/// Also compares the two factorizations.
PropertyReport verify_sieve_vs_direct(std::uint64_t limit,
                                      std::span<const FunctionId> functions = kAllFunctions,
                                      const VerifyOptions& options = {});

/// sigmastar and phistar against brute-force unitary-divisor enumeration:
/// sigmastar(n) sums the d | n with gcd(d, n/d) = 1, and phistar(n) counts
/// 1 <= k <= n divisible by no unitary divisor d > 1 of n.
PropertyReport verify_unitary_parity(std::uint64_t limit, const VerifyOptions& options = {});

/// Summary lines; the wall-time line is included only when requested so
/// that default output stays reproducible.
void write_property_text(std::ostream& out, const PropertyReport& report,
                         bool include_timing = false);

/// Header n,m,detail.
void write_violations_csv(std::ostream& out, const PropertyReport& report, char separator = ',');

}  // namespace arithcomp

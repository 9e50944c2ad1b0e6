#include "arithcomp/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "arithcomp/errors.hpp"
#include "arithcomp/parallel.hpp"
#include "arithcomp/sieve.hpp"

namespace arithcomp {

namespace {

using Clock = std::chrono::steady_clock;
using u128 = UInt128;

struct NameEntry {
  DivisorRelation relation;
  std::string_view name;
};

constexpr std::array<NameEntry, 5> kRelationNames = {{
    {DivisorRelation::SigmaOverNUp, "sigma_over_n_up"},
    {DivisorRelation::PhiOverNDown, "phi_over_n_down"},
    {DivisorRelation::PsiOverNUp, "psi_over_n_up"},
    {DivisorRelation::SigmaOverPhiUp, "sigma_over_phi_up"},
    {DivisorRelation::PsiOverPhiUp, "psi_over_phi_up"},
}};

unsigned resolve_workers(const VerifyOptions& options) {
  return options.workers == 0 ? default_workers() : options.workers;
}

std::uint64_t small_eval(FunctionId fid, const SmallFactorization& f) {
  const auto value = eval_base_small(fid, f);
  if (!value) {
    throw CapacityError("64-bit overflow evaluating " + std::string(function_name(fid)));
  }
  return *value;
}

void sort_violations(std::vector<Violation>& violations) {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return a.n != b.n ? a.n < b.n : a.m < b.m;
  });
}

// Per-chunk violation lists concatenated in chunk order, then sorted.
struct ChunkedViolations {
  explicit ChunkedViolations(std::size_t chunks) : lists(chunks), counts(chunks, 0) {}

  void merge_into(PropertyReport& report) {
    for (auto& list : lists) {
      std::move(list.begin(), list.end(), std::back_inserter(report.violations));
    }
    report.cases_checked = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    sort_violations(report.violations);
  }

  std::vector<std::vector<Violation>> lists;
  std::vector<std::uint64_t> counts;
};

// Divisors of n by trial division, ascending.
std::vector<std::uint64_t> divisors_by_trial(std::uint64_t n) {
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) {
        high.push_back(n / d);
      }
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

std::string_view relation_name(DivisorRelation relation) {
  for (const auto& entry : kRelationNames) {
    if (entry.relation == relation) {
      return entry.name;
    }
  }
  return "?";
}

std::optional<DivisorRelation> relation_from_name(std::string_view name) {
  for (const auto& entry : kRelationNames) {
    if (entry.name == name) {
      return entry.relation;
    }
  }
  return std::nullopt;
}

PropertyReport verify_chain(std::uint64_t limit, const VerifyOptions& options) {
  if (limit < 1) {
    throw std::invalid_argument("verify_chain needs limit >= 1");
  }
  const auto start = Clock::now();
  PropertyReport report;
  report.property = "phi <= phistar <= n <= sigmastar <= psi <= sigma";
  report.to = limit;
  const SieveTable sieve(std::max<std::uint64_t>(limit, 2));

  const unsigned workers = resolve_workers(options);
  ChunkedViolations chunks(partition_range(1, limit, workers).size());
  run_partitioned(1, limit, workers, [&](std::size_t index, std::uint64_t lo, std::uint64_t hi) {
    auto& out = chunks.lists[index];
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const SmallFactorization f = sieve.factorize(n);
      const std::array<std::uint64_t, 6> chain = {
          small_eval(FunctionId::Phi, f),       small_eval(FunctionId::PhiStar, f), n,
          small_eval(FunctionId::SigmaStar, f), small_eval(FunctionId::Psi, f),
          small_eval(FunctionId::Sigma, f)};
      if (!std::is_sorted(chain.begin(), chain.end())) {
        std::string detail;
        for (std::uint64_t v : chain) {
          detail += (detail.empty() ? "" : " <= ") + std::to_string(v);
        }
        out.push_back({n, 0, detail});
      }
      ++chunks.counts[index];
    }
  });
  chunks.merge_into(report);
  report.wall_time = Clock::now() - start;
  return report;
}

PropertyReport verify_divisor_monotonicity(std::uint64_t limit, DivisorRelation relation,
                                           const VerifyOptions& options) {
  if (limit < 2) {
    throw std::invalid_argument("verify_divisor_monotonicity needs limit >= 2");
  }
  const auto start = Clock::now();
  PropertyReport report;
  report.property = std::string(relation_name(relation));
  report.to = limit;

  const SieveTable sieve(limit);
  std::vector<std::uint64_t> sigma(limit + 1);
  std::vector<std::uint64_t> phi(limit + 1);
  std::vector<std::uint64_t> psi(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const SmallFactorization f = sieve.factorize(n);
    sigma[n] = small_eval(FunctionId::Sigma, f);
    phi[n] = small_eval(FunctionId::Phi, f);
    psi[n] = small_eval(FunctionId::Psi, f);
  }

  // a/b (for s) against c/d (for t); 64-bit operands make the 128-bit
  // cross products exact.
  auto fractions = [&](std::uint64_t s, std::uint64_t t) {
    switch (relation) {
      case DivisorRelation::SigmaOverNUp: return std::array{sigma[s], s, sigma[t], t};
      case DivisorRelation::PhiOverNDown: return std::array{phi[s], s, phi[t], t};
      case DivisorRelation::PsiOverNUp: return std::array{psi[s], s, psi[t], t};
      case DivisorRelation::SigmaOverPhiUp: return std::array{sigma[s], phi[s], sigma[t], phi[t]};
      case DivisorRelation::PsiOverPhiUp: return std::array{psi[s], phi[s], psi[t], phi[t]};
    }
    return std::array<std::uint64_t, 4>{};
  };
  const bool decreasing = relation == DivisorRelation::PhiOverNDown;

  const unsigned workers = resolve_workers(options);
  ChunkedViolations chunks(partition_range(1, limit / 2, workers).size());
  run_partitioned(1, limit / 2, workers, [&](std::size_t index, std::uint64_t lo, std::uint64_t hi) {
    auto& out = chunks.lists[index];
    for (std::uint64_t s = lo; s <= hi; ++s) {
      for (std::uint64_t t = 2 * s; t <= limit; t += s) {
        const auto [a, b, c, d] = fractions(s, t);
        const u128 lhs = static_cast<u128>(a) * d;
        const u128 rhs = static_cast<u128>(c) * b;
        const bool ok = decreasing ? lhs >= rhs : lhs <= rhs;
        if (!ok) {
          out.push_back({s, t,
                         std::to_string(a) + "/" + std::to_string(b) + " vs " +
                             std::to_string(c) + "/" + std::to_string(d)});
        }
        ++chunks.counts[index];
      }
    }
  });
  chunks.merge_into(report);
  report.wall_time = Clock::now() - start;
  return report;
}

PropertyReport find_sigma_star_counterexample(std::uint64_t limit) {
  const auto start = Clock::now();
  PropertyReport report;
  report.property = "s | t with sigmastar(s)/s > sigmastar(t)/t";
  report.to = limit;
  report.counterexample_search = true;
  if (limit >= 2) {
    const SieveTable sieve(limit);
    std::vector<std::uint64_t> sigma_star(limit + 1);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      sigma_star[n] = small_eval(FunctionId::SigmaStar, sieve.factorize(n));
    }
    for (std::uint64_t s = 1; s <= limit / 2 && report.violations.empty(); ++s) {
      for (std::uint64_t t = 2 * s; t <= limit; t += s) {
        ++report.cases_checked;
        if (static_cast<u128>(sigma_star[s]) * t > static_cast<u128>(sigma_star[t]) * s) {
          report.violations.push_back({s, t,
                                       std::to_string(sigma_star[s]) + "/" + std::to_string(s) +
                                           " > " + std::to_string(sigma_star[t]) + "/" +
                                           std::to_string(t)});
          break;
        }
      }
    }
  }
  report.wall_time = Clock::now() - start;
  return report;
}

PropertyReport verify_sieve_vs_direct(std::uint64_t limit, std::span<const FunctionId> functions,
                                      const VerifyOptions& options) {
  if (limit < 2) {
    throw std::invalid_argument("verify_sieve_vs_direct needs limit >= 2");
  }
  const auto start = Clock::now();
  PropertyReport report;
  report.property = "sieve path == direct factorization path";
  report.to = limit;
  const SieveTable sieve(limit);

  const unsigned workers = resolve_workers(options);
  ChunkedViolations chunks(partition_range(1, limit, workers).size());
  run_partitioned(1, limit, workers, [&](std::size_t index, std::uint64_t lo, std::uint64_t hi) {
    auto& out = chunks.lists[index];
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const SmallFactorization via_sieve = sieve.factorize(n);
      const Factorization direct = factorize(BigInt(n));
      if (Factorization::from_small(via_sieve) != direct) {
        out.push_back({n, 0, "factorization " + direct.to_string()});
      }
      for (FunctionId fid : functions) {
        ++chunks.counts[index];
        std::optional<BigInt> sieve_value;
        std::optional<BigInt> direct_value;
        try {
          const auto small = eval_base_small(fid, via_sieve);
          sieve_value = small ? BigInt(*small)
                              : eval_base(fid, Factorization::from_small(via_sieve));
        } catch (const DomainError&) {
        }
        try {
          direct_value = eval_base(fid, direct);
        } catch (const DomainError&) {
        }
        if (sieve_value != direct_value) {
          out.push_back({n, 0,
                         std::string(function_name(fid)) + ": sieve " +
                             (sieve_value ? sieve_value->str() : "error") + ", direct " +
                             (direct_value ? direct_value->str() : "error")});
        }
      }
    }
  });
  chunks.merge_into(report);
  report.wall_time = Clock::now() - start;
  return report;
}

PropertyReport verify_unitary_parity(std::uint64_t limit, const VerifyOptions& options) {
  if (limit < 1) {
    throw std::invalid_argument("verify_unitary_parity needs limit >= 1");
  }
  const auto start = Clock::now();
  PropertyReport report;
  report.property = "sigmastar/phistar == unitary-divisor enumeration";
  report.to = limit;

  const unsigned workers = resolve_workers(options);
  ChunkedViolations chunks(partition_range(1, limit, workers).size());
  run_partitioned(1, limit, workers, [&](std::size_t index, std::uint64_t lo, std::uint64_t hi) {
    auto& out = chunks.lists[index];
    for (std::uint64_t n = lo; n <= hi; ++n) {
      std::vector<std::uint64_t> unitary;
      std::uint64_t sigma_star = 0;
      for (std::uint64_t d : divisors_by_trial(n)) {
        if (std::gcd(d, n / d) == 1) {
          sigma_star += d;
          if (d > 1) {
            unitary.push_back(d);
          }
        }
      }
      std::uint64_t phi_star = 0;
      for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::none_of(unitary.begin(), unitary.end(),
                         [k](std::uint64_t d) { return k % d == 0; })) {
          ++phi_star;
        }
      }
      const SmallFactorization f = factorize_u64(n);
      const std::uint64_t formula_sigma = small_eval(FunctionId::SigmaStar, f);
      const std::uint64_t formula_phi = small_eval(FunctionId::PhiStar, f);
      if (formula_sigma != sigma_star || formula_phi != phi_star) {
        out.push_back({n, 0,
                       "sigmastar " + std::to_string(formula_sigma) + " vs " +
                           std::to_string(sigma_star) + ", phistar " +
                           std::to_string(formula_phi) + " vs " + std::to_string(phi_star)});
      }
      ++chunks.counts[index];
    }
  });
  chunks.merge_into(report);
  report.wall_time = Clock::now() - start;
  return report;
}

void write_property_text(std::ostream& out, const PropertyReport& report, bool include_timing) {
  out << "property: " << report.property << '\n';
  out << "range: [" << report.from << ", " << report.to << "]\n";
  out << "cases: " << report.cases_checked << '\n';
  if (report.counterexample_search) {
    out << "result: " << (report.violations.empty() ? "inconclusive" : "counterexample found")
        << '\n';
  } else {
    out << "violations: " << report.violations.size() << '\n';
  }
  for (const auto& v : report.violations) {
    out << "  n=" << v.n;
    if (v.m != 0) {
      out << " m=" << v.m;
    }
    out << ": " << v.detail << '\n';
  }
  if (include_timing) {
    out << "wall_time_s: " << report.wall_time.count() << '\n';
  }
}

void write_violations_csv(std::ostream& out, const PropertyReport& report, char separator) {
  out << "n" << separator << "m" << separator << "detail\n";
  for (const auto& v : report.violations) {
    out << v.n << separator << v.m << separator << v.detail << '\n';
  }
}

}  // namespace arithcomp

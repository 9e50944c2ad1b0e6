#pragma once

#include <memory>
#include <vector>

#include "arithcomp/functions.hpp"
#include "arithcomp/sieve.hpp"

namespace arithcomp {

struct Stage {
  FunctionId fid = FunctionId::Identity;
  unsigned iterations = 1;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Stages in written order, outermost first; evaluation runs right to left.
/// sigma(phistar(n)) is {{Sigma, 1}, {PhiStar, 1}}. No stages is the identity,
/// and a stage with 0 iterations is the identity too.
struct Composition {
  std::vector<Stage> stages;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Applies compositions by re-factoring every intermediate value. Values below
/// 2^64 take the 64-bit path (sieve lookup when the value is covered, rho
/// otherwise); larger values go through the unbounded factorizer.
class Evaluator {
 public:
  Evaluator() = default;
  explicit Evaluator(std::shared_ptr<const SieveTable> sieve) : sieve_(std::move(sieve)) {}

  Factorization factor(const BigInt& n) const;
  BigInt apply(FunctionId fid, const BigInt& n) const;

  /// Throws StageError (a DomainError) naming the failing stage.
  BigInt evaluate(const Composition& composition, const BigInt& n) const;

  const SieveTable* sieve() const noexcept { return sieve_.get(); }

 private:
  SmallFactorization factor_small(std::uint64_t n) const;

  std::shared_ptr<const SieveTable> sieve_;
};

BigInt eval_composition(const Composition& composition, const BigInt& n);

}  // namespace arithcomp

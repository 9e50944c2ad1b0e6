#include "arithcomp/composition.hpp"

#include <string>

#include "arithcomp/errors.hpp"

namespace arithcomp {

SmallFactorization Evaluator::factor_small(std::uint64_t n) const {
  if (sieve_ && sieve_->contains(n)) {
    return sieve_->factorize(n);
  }
  return factorize_u64(n);
}

Factorization Evaluator::factor(const BigInt& n) const {
  if (n < 1) {
    throw DomainError("cannot factor " + n.str() + ": arguments must be >= 1");
  }
  if (const auto small = to_u64(n)) {
    return Factorization::from_small(factor_small(*small));
  }
  return factorize(n);
}

BigInt Evaluator::apply(FunctionId fid, const BigInt& n) const {
  if (n < 1) {
    throw DomainError("argument " + n.str() + " is not a positive integer");
  }
  if (fid == FunctionId::Identity) {
    return n;
  }
  if (fid == FunctionId::One) {
    return 1;
  }
  if (const auto small = to_u64(n)) {
    const SmallFactorization f = factor_small(*small);
    if (const auto value = eval_base_small(fid, f)) {
      return *value;
    }
    return eval_base(fid, Factorization::from_small(f));
  }
  return eval_base(fid, factorize(n));
}

BigInt Evaluator::evaluate(const Composition& composition, const BigInt& n) const {
  if (n < 1) {
    throw DomainError("argument " + n.str() + " is not a positive integer");
  }
  BigInt value = n;
  for (std::size_t i = composition.stages.size(); i-- > 0;) {
    const Stage& stage = composition.stages[i];
    for (unsigned k = 0; k < stage.iterations; ++k) {
      try {
        value = apply(stage.fid, value);
      } catch (const StageError&) {
        throw;
      } catch (const DomainError& e) {
        throw StageError("stage " + std::to_string(i) + " (" +
                             std::string(function_name(stage.fid)) + "): " + e.what(),
                         i);
      }
    }
  }
  return value;
}

BigInt eval_composition(const Composition& composition, const BigInt& n) {
  return Evaluator{}.evaluate(composition, n);
}

}  // namespace arithcomp

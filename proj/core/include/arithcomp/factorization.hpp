#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arithcomp/bigint.hpp"

namespace arithcomp {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime power with a 64-bit prime; the working type of sieve-driven paths.
struct SmallPrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 1;

  friend bool operator==(const SmallPrimePower&, const SmallPrimePower&) = default;
};

using SmallFactorization = std::vector<SmallPrimePower>;

/// Canonical factorization of a positive integer: primes strictly increasing,
/// exponents >= 1. The empty factorization is n = 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates ordering, exponents, and primality of every listed prime.
  /// Throws std::invalid_argument on a non-canonical list.
  explicit Factorization(std::vector<PrimePower> pairs);

  /// Skips validation; the caller guarantees a canonical list.
  static Factorization from_canonical(std::vector<PrimePower> pairs);
  static Factorization from_small(std::span<const SmallPrimePower> pairs);

  const std::vector<PrimePower>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  /// Reconstructs the integer as the product of the prime powers.
  BigInt value() const;

  bool is_squarefree() const;

  /// Natural log of value(), as a sum of exponent-weighted prime logs.
  double log_value() const;

  /// "2^3 * 3^2 * 5"; "1" when empty.
  std::string to_string() const;

  /// Factorization of the product.
  friend Factorization operator*(const Factorization& lhs, const Factorization& rhs);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

/// Full factorization. Guaranteed (and fast) for n < 2^64: trial division,
/// then Brent's rho with the fixed polynomials x^2 + c, c = 1, 2, ... and
/// start value 2. Beyond 64 bits the rho phase has an iteration budget and
/// throws CapacityError when it runs out.
Factorization factorize(const BigInt& n);

SmallFactorization factorize_u64(std::uint64_t n);

}  // namespace arithcomp

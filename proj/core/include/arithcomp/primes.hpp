#pragma once

#include <cstdint>
#include <vector>

#include "arithcomp/bigint.hpp"

namespace arithcomp {

enum class Primality {
  Composite,
  Prime,
  /// Passed BPSW above the deterministic Miller-Rabin range (3.3e24).
  /// No BPSW pseudoprime is known, but none has been ruled out.
  ProbablePrime,
};

/// Deterministic Miller-Rabin over the first twelve prime bases.
bool is_prime(std::uint64_t n);

/// Exact below 3317044064679887385961981; BPSW above (see primality()).
bool is_prime(const BigInt& n);

Primality primality(const BigInt& n);

/// Ascending primes p <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Product of the first k primes (k >= 1).
BigInt primorial(std::size_t k);

}  // namespace arithcomp

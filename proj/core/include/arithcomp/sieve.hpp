#pragma once

#include <cstdint>
#include <vector>

#include "arithcomp/factorization.hpp"

namespace arithcomp {

/// Smallest-prime-factor table for 2 <= m <= limit, built by a linear sieve.
/// Immutable once constructed; share it read-only across threads.
class SieveTable {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000'000;

  /// Throws CapacityError when limit > cap and DomainError when limit < 2.
  explicit SieveTable(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of m, 2 <= m <= limit().
  std::uint64_t spf(std::uint64_t m) const { return spf_[m]; }

  bool contains(std::uint64_t m) const noexcept { return m >= 1 && m <= limit_; }
  bool is_prime(std::uint64_t m) const { return m >= 2 && spf_[m] == m; }

  /// Factorization by repeated smallest-prime-factor division (1 <= m <= limit()).
  SmallFactorization factorize(std::uint64_t m) const;

  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

SieveTable build_spf_sieve(std::uint64_t limit, std::uint64_t cap = SieveTable::kDefaultCap);

}  // namespace arithcomp

#include "arithcomp/sieve.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "arithcomp/errors.hpp"

namespace arithcomp {

SieveTable::SieveTable(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
  if (limit < 2) {
    throw DomainError("sieve limit must be >= 2, got " + std::to_string(limit));
  }
  if (limit > cap || limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(cap));
  }
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t bound = spf_[i];
    for (std::uint32_t p : primes_) {
      if (p > bound || p * i > limit) {
        break;
      }
      spf_[p * i] = p;
    }
  }
}

SmallFactorization SieveTable::factorize(std::uint64_t m) const {
  if (!contains(m)) {
    throw std::out_of_range("sieve lookup " + std::to_string(m) + " outside [1, " +
                            std::to_string(limit_) + "]");
  }
  SmallFactorization result;
  while (m > 1) {
    const std::uint64_t p = spf_[m];
    unsigned a = 0;
    do {
      m /= p;
      ++a;
    } while (m % p == 0);
    result.push_back({p, a});
  }
  return result;
}

SieveTable build_spf_sieve(std::uint64_t limit, std::uint64_t cap) {
  return SieveTable(limit, cap);
}

}  // namespace arithcomp

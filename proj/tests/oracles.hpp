#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the library, so the checks stay independent of the formulas
// they verify.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
    }
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a > 0) {
      out.emplace_back(d, a);
    }
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

inline std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto d : divisors(n)) {
    s += d;
  }
  return s;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    count += std::gcd(k, n) == 1 ? 1 : 0;
  }
  return count;
}

// psi(n) = n prod_{p | n} (1 + 1/p), from distinct primes found by trial.
inline std::uint64_t psi(std::uint64_t n) {
  std::uint64_t value = n;
  for (auto [p, a] : trial_factor(n)) {
    value = value / p * (p + 1);
  }
  return value;
}

inline std::uint64_t sigma_star(std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto d : divisors(n)) {
    if (std::gcd(d, n / d) == 1) {
      s += d;
    }
  }
  return s;
}

// Count of 1 <= k <= n whose largest divisor that is a unitary divisor of n is 1.
inline std::uint64_t phi_star(std::uint64_t n) {
  std::vector<std::uint64_t> unitary;
  for (auto d : divisors(n)) {
    if (d > 1 && std::gcd(d, n / d) == 1) {
      unitary.push_back(d);
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    bool coprime = true;
    for (auto d : unitary) {
      if (k % d == 0) {
        coprime = false;
        break;
      }
    }
    count += coprime ? 1 : 0;
  }
  return count;
}

// Exponential divisors: d with the same prime support as n and v_p(d) | v_p(n).
inline std::uint64_t sigma_exp(std::uint64_t n) {
  if (n == 1) {
    return 1;
  }
  const auto fn = trial_factor(n);
  std::uint64_t s = 0;
  for (auto d : divisors(n)) {
    bool ok = true;
    for (auto [p, a] : fn) {
      unsigned b = 0;
      std::uint64_t m = d;
      while (m % p == 0) {
        m /= p;
        ++b;
      }
      if (b == 0 || a % b != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      s += d;
    }
  }
  return s;
}

// Regular residues: 1 <= a <= n with a^2 x = a (mod n) for some x.
inline std::uint64_t rho(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    const std::uint64_t r = a % n;
    const std::uint64_t sq = r * r % n;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (sq * x % n == r) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// Product of (p^a - 1) over the trial-division factorization; quick enough
// for ranges where the counting definition above is too slow.
inline std::uint64_t phi_star_formula(std::uint64_t n) {
  std::uint64_t out = 1;
  for (auto [p, a] : trial_factor(n)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) {
      q *= p;
    }
    out *= q - 1;
  }
  return out;
}

inline std::uint64_t gpf(std::uint64_t n) { return trial_factor(n).back().first; }

}  // namespace oracle

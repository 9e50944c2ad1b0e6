#include "arithcomp/primes.hpp"

#include <array>
#include <cmath>

namespace arithcomp {

namespace {

using boost::multiprecision::powm;

constexpr std::array<std::uint64_t, 13> kWitnessBases = {2,  3,  5,  7,  11, 13, 17,
                                                         19, 23, 29, 31, 37, 41};

// Sorenson & Webster: the first 13 prime bases are deterministic below this.
const BigInt kDeterministicBound{"3317044064679887385961981"};

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

bool strong_probable_prime(const BigInt& n, const BigInt& base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  BigInt x = powm(base, d, n);
  const BigInt minus_one = n - 1;
  if (x == 1 || x == minus_one) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == minus_one) {
      return true;
    }
  }
  return false;
}

int jacobi(BigInt a, BigInt n) {
  a %= n;
  if (a < 0) {
    a += n;
  }
  int result = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) {
        result = -result;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

BigInt mod_positive(const BigInt& value, const BigInt& n) {
  BigInt r = value % n;
  return r < 0 ? BigInt(r + n) : r;
}

BigInt half_mod(const BigInt& value, const BigInt& n) {
  return boost::multiprecision::bit_test(value, 0) ? BigInt((value + n) >> 1)
                                                   : BigInt(value >> 1);
}

// Strong Lucas probable-prime test with Selfridge's parameters (P = 1).
bool strong_lucas_probable_prime(const BigInt& n) {
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) {
    return false;
  }
  long d_param = 5;
  while (true) {
    const int j = jacobi(BigInt(d_param), n);
    if (j == -1) {
      break;
    }
    if (j == 0 && n != (d_param < 0 ? -d_param : d_param)) {
      return false;
    }
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  const BigInt big_d = mod_positive(BigInt(d_param), n);
  const BigInt q = mod_positive(BigInt((1 - d_param) / 4), n);

  BigInt d = n + 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }

  BigInt u = 1;
  BigInt v = 1;
  BigInt qk = q;
  for (int bit = static_cast<int>(boost::multiprecision::msb(d)) - 1; bit >= 0; --bit) {
    u = (u * v) % n;
    v = mod_positive(v * v - 2 * qk, n);
    qk = (qk * qk) % n;
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(bit))) {
      const BigInt next_u = half_mod(u + v, n);
      const BigInt next_v = half_mod(big_d * u + v, n);
      u = next_u;
      v = next_v;
      qk = (qk * q) % n;
    }
  }
  if (u == 0 || v == 0) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    v = mod_positive(v * v - 2 * qk, n);
    qk = (qk * qk) % n;
    if (v == 0) {
      return true;
    }
  }
  return false;
}

std::size_t prime_count_upper_limit(std::size_t count) {
  if (count < 6) {
    return 15;
  }
  const double c = static_cast<double>(count);
  return static_cast<std::size_t>(c * (std::log(c) + std::log(std::log(c)))) + 3;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : kWitnessBases) {
    if (n % p == 0) {
      return n == p;
    }
  }
  if (n < 41 * 41) {
    return true;
  }
  for (std::size_t i = 0; i < 12; ++i) {
    if (!strong_probable_prime(n, kWitnessBases[i])) {
      return false;
    }
  }
  return true;
}

Primality primality(const BigInt& n) {
  if (const auto small = to_u64(n)) {
    return is_prime(*small) ? Primality::Prime : Primality::Composite;
  }
  if (n < 0) {
    return Primality::Composite;
  }
  for (std::uint64_t p : kWitnessBases) {
    if (n % p == 0) {
      return Primality::Composite;
    }
  }
  if (n < kDeterministicBound) {
    for (std::uint64_t p : kWitnessBases) {
      if (!strong_probable_prime(n, BigInt(p))) {
        return Primality::Composite;
      }
    }
    return Primality::Prime;
  }
  if (!strong_probable_prime(n, BigInt(2)) || !strong_lucas_probable_prime(n)) {
    return Primality::Composite;
  }
  return Primality::ProbablePrime;
}

bool is_prime(const BigInt& n) { return primality(n) != Primality::Composite; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) {
    return primes;
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) {
      continue;
    }
    primes.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) {
        composite[j] = true;
      }
    }
  }
  return primes;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  auto primes = primes_up_to(prime_count_upper_limit(count));
  primes.resize(count);
  return primes;
}

BigInt primorial(std::size_t k) {
  BigInt product = 1;
  for (std::uint64_t p : first_primes(k)) {
    product *= p;
  }
  return product;
}

}  // namespace arithcomp

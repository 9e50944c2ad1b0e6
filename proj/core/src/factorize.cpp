#include "arithcomp/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arithcomp/errors.hpp"
#include "arithcomp/primes.hpp"

namespace arithcomp {

namespace {

constexpr std::uint64_t kSmallTrialBound = 1024;
constexpr std::uint64_t kBigTrialBound = 1 << 16;
constexpr std::uint64_t kBigRhoIterations = 1 << 22;
constexpr std::uint64_t kBigRhoPolynomials = 8;
constexpr unsigned kRhoBatch = 128;

const std::vector<std::uint64_t>& small_trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kSmallTrialBound);
  return primes;
}

const std::vector<std::uint64_t>& big_trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kBigTrialBound);
  return primes;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's cycle detection on x -> x^2 + c mod n, x0 = 2, with batched gcds.
// Returns a nontrivial factor of the odd composite n, or 0 for this c.
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t c) {
  auto step = [n, c](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = 2;
  std::uint64_t x = y;
  std::uint64_t saved = y;
  std::uint64_t g = 1;
  std::uint64_t q = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      y = step(y);
    }
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      saved = y;
      const std::uint64_t batch = std::min<std::uint64_t>(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        y = step(y);
        q = mul_mod(q, abs_diff(x, y), n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    // The batch overshot; replay it one step at a time.
    do {
      saved = step(saved);
      g = std::gcd(abs_diff(x, saved), n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void split_u64(std::uint64_t n, std::vector<std::uint64_t>& primes_out) {
  if (n == 1) {
    return;
  }
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    if (const std::uint64_t d = brent_rho(n, c); d != 0) {
      split_u64(d, primes_out);
      split_u64(n / d, primes_out);
      return;
    }
  }
}

template <typename Prime, typename Pair>
std::vector<Pair> collect(std::vector<Prime> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<Pair> pairs;
  for (const auto& p : primes) {
    if (!pairs.empty() && pairs.back().prime == p) {
      ++pairs.back().exponent;
    } else {
      pairs.push_back(Pair{p, 1});
    }
  }
  return pairs;
}

BigInt big_brent_rho(const BigInt& n, std::uint64_t c) {
  auto step = [&n, c](const BigInt& v) { return BigInt((v * v + c) % n); };
  BigInt y = 2;
  BigInt x = y;
  BigInt saved = y;
  BigInt g = 1;
  BigInt q = 1;
  std::uint64_t iterations = 0;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      y = step(y);
    }
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      saved = y;
      const std::uint64_t batch = std::min<std::uint64_t>(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        y = step(y);
        q = (q * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
      }
      g = boost::multiprecision::gcd(q, n);
      iterations += batch;
    }
    if (iterations > kBigRhoIterations) {
      return 0;
    }
  }
  if (g == n) {
    do {
      saved = step(saved);
      g = boost::multiprecision::gcd(x > saved ? BigInt(x - saved) : BigInt(saved - x), n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void split_big(const BigInt& n, std::vector<BigInt>& primes_out) {
  if (n == 1) {
    return;
  }
  if (const auto small = to_u64(n)) {
    std::vector<std::uint64_t> found;
    split_u64(*small, found);
    primes_out.insert(primes_out.end(), found.begin(), found.end());
    return;
  }
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1; c <= kBigRhoPolynomials; ++c) {
    if (BigInt d = big_brent_rho(n, c); d != 0) {
      split_big(d, primes_out);
      split_big(n / d, primes_out);
      return;
    }
  }
  throw CapacityError("rho budget exhausted factoring a " +
                      std::to_string(boost::multiprecision::msb(n) + 1) +
                      "-bit cofactor");
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].exponent == 0) {
      throw std::invalid_argument("factorization exponent must be >= 1");
    }
    if (i > 0 && !(pairs_[i - 1].prime < pairs_[i].prime)) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
    if (!is_prime(pairs_[i].prime)) {
      throw std::invalid_argument("factorization lists non-prime " + pairs_[i].prime.str());
    }
  }
}

Factorization Factorization::from_canonical(std::vector<PrimePower> pairs) {
  Factorization f;
  f.pairs_ = std::move(pairs);
  return f;
}

Factorization Factorization::from_small(std::span<const SmallPrimePower> pairs) {
  Factorization f;
  f.pairs_.reserve(pairs.size());
  for (const auto& [p, a] : pairs) {
    f.pairs_.push_back(PrimePower{BigInt(p), a});
  }
  return f;
}

BigInt Factorization::value() const {
  BigInt product = 1;
  for (const auto& [p, a] : pairs_) {
    product *= boost::multiprecision::pow(p, a);
  }
  return product;
}

bool Factorization::is_squarefree() const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

double Factorization::log_value() const {
  double sum = 0.0;
  for (const auto& [p, a] : pairs_) {
    sum += a * log_of(p);
  }
  return sum;
}

std::string Factorization::to_string() const {
  if (pairs_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [p, a] : pairs_) {
    if (!out.empty()) {
      out += " * ";
    }
    out += p.str();
    if (a > 1) {
      out += "^" + std::to_string(a);
    }
  }
  return out;
}

Factorization operator*(const Factorization& lhs, const Factorization& rhs) {
  std::vector<PrimePower> merged;
  merged.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() && b != rhs.end()) {
    if (a->prime == b->prime) {
      merged.push_back(PrimePower{a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    } else if (a->prime < b->prime) {
      merged.push_back(*a++);
    } else {
      merged.push_back(*b++);
    }
  }
  merged.insert(merged.end(), a, lhs.end());
  merged.insert(merged.end(), b, rhs.end());
  return Factorization::from_canonical(std::move(merged));
}

SmallFactorization factorize_u64(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("cannot factorize 0");
  }
  SmallFactorization result;
  for (std::uint64_t p : small_trial_primes()) {
    if (p * p > n) {
      break;
    }
    if (n % p == 0) {
      unsigned a = 0;
      do {
        n /= p;
        ++a;
      } while (n % p == 0);
      result.push_back({p, a});
    }
  }
  if (n == 1) {
    return result;
  }
  std::vector<std::uint64_t> rest;
  split_u64(n, rest);
  auto tail = collect<std::uint64_t, SmallPrimePower>(std::move(rest));
  result.insert(result.end(), tail.begin(), tail.end());
  return result;
}

Factorization factorize(const BigInt& n) {
  if (n < 1) {
    throw DomainError("factorize requires n >= 1, got " + n.str());
  }
  if (const auto small = to_u64(n)) {
    return Factorization::from_small(factorize_u64(*small));
  }
  std::vector<PrimePower> pairs;
  BigInt rest = n;
  for (std::uint64_t p : big_trial_primes()) {
    if (to_u64(rest)) {
      break;
    }
    if (rest % p == 0) {
      unsigned a = 0;
      do {
        rest /= p;
        ++a;
      } while (rest % p == 0);
      pairs.push_back(PrimePower{BigInt(p), a});
    }
  }
  Factorization head = Factorization::from_canonical(std::move(pairs));
  if (const auto small = to_u64(rest)) {
    return head * Factorization::from_small(factorize_u64(*small));
  }
  std::vector<BigInt> found;
  split_big(rest, found);
  return head * Factorization::from_canonical(collect<BigInt, PrimePower>(std::move(found)));
}

}  // namespace arithcomp

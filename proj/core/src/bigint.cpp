#include "arithcomp/bigint.hpp"

#include <cmath>
#include <numbers>

namespace arithcomp {

namespace {

constexpr unsigned kKeptBits = 64;

// Splits value = mantissa * 2^shift with mantissa < 2^64.
std::pair<std::uint64_t, long> split_top_bits(const BigInt& value) {
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  if (bits <= kKeptBits) {
    return {value.convert_to<std::uint64_t>(), 0};
  }
  const unsigned shift = bits - kKeptBits;
  return {BigInt(value >> shift).convert_to<std::uint64_t>(),
          static_cast<long>(shift)};
}

}  // namespace

double log_of(const BigInt& value) {
  const auto [mantissa, shift] = split_top_bits(value);
  return std::log(static_cast<double>(mantissa)) +
         static_cast<double>(shift) * std::numbers::ln2;
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) {
    return 0.0;
  }
  if (num <= std::numeric_limits<std::uint64_t>::max() &&
      den <= std::numeric_limits<std::uint64_t>::max()) {
    const auto a = num.convert_to<std::uint64_t>();
    const auto b = den.convert_to<std::uint64_t>();
    if (a < (std::uint64_t{1} << 53) && b < (std::uint64_t{1} << 53)) {
      return static_cast<double>(a) / static_cast<double>(b);
    }
  }
  // Scale so the integer quotient carries at least 64 significant bits.
  const long num_bits = static_cast<long>(boost::multiprecision::msb(num)) + 1;
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den)) + 1;
  const long shift = std::max(0L, den_bits - num_bits + 66);
  const BigInt quotient = (num << shift) / den;
  const auto [mantissa, extra] = split_top_bits(quotient);
  return std::ldexp(static_cast<double>(mantissa), static_cast<int>(extra - shift));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace arithcomp

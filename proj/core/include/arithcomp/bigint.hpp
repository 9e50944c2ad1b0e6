#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arithcomp {

using BigInt = boost::multiprecision::cpp_int;

__extension__ typedef unsigned __int128 UInt128;

inline std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::uint64_t>();
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Natural log of a positive integer of any size. The value is scaled to its
/// top 64 bits first, so nothing overflows a double.
double log_of(const BigInt& value);

/// num/den as the nearest double reachable from a 64-bit quotient, for any
/// magnitudes (den > 0).
double ratio_to_double(const BigInt& num, const BigInt& den);

/// Greatest common divisor and modular exponentiation for unsigned 64-bit
/// values, via 128-bit products.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace arithcomp

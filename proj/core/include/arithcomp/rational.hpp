#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "arithcomp/bigint.hpp"

namespace arithcomp {

/// Exact fraction in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(BigInt value);  // NOLINT(google-explicit-constructor)
  ExactRational(long long value) : ExactRational(BigInt(value)) {}  // NOLINT
  /// Throws DomainError on a zero denominator.
  ExactRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  ExactRational operator-() const;

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& out, const ExactRational& value);

}  // namespace arithcomp

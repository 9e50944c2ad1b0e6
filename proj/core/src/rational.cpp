#include "arithcomp/rational.hpp"

#include <ostream>

#include "arithcomp/errors.hpp"

namespace arithcomp {

ExactRational::ExactRational(BigInt value) : num_(std::move(value)), den_(1) {}

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) {
    throw DomainError("rational with zero denominator");
  }
  normalize();
}

void ExactRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

double ExactRational::to_double() const {
  return num_ < 0 ? -ratio_to_double(-num_, den_) : ratio_to_double(num_, den_);
}

std::string ExactRational::to_string() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.num_ == 0) {
    throw DomainError("rational division by zero");
  }
  return {a.num_ * b.den_, a.den_ * b.num_};
}

ExactRational ExactRational::operator-() const {
  ExactRational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  return lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& out, const ExactRational& value) {
  return out << value.to_string();
}

}  // namespace arithcomp

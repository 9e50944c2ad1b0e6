#include "arithcomp/functions.hpp"

#include <algorithm>

#include "arithcomp/errors.hpp"

namespace arithcomp {

namespace {

struct NameEntry {
  FunctionId fid;
  std::string_view name;
};

constexpr std::array<NameEntry, 14> kNames = {{
    {FunctionId::Identity, "n"},
    {FunctionId::One, "one"},
    {FunctionId::Sigma, "sigma"},
    {FunctionId::Phi, "phi"},
    {FunctionId::Psi, "psi"},
    {FunctionId::SigmaStar, "sigmastar"},
    {FunctionId::PhiStar, "phistar"},
    {FunctionId::SigmaExp, "sigmae"},
    {FunctionId::Rho, "rho"},
    {FunctionId::GreatestPrimeFactor, "gpf"},
    {FunctionId::PMinusOneProd, "pm1"},
    {FunctionId::PMinusOnePowProd, "pm1pow"},
    {FunctionId::PPlusOneProd, "pp1"},
    {FunctionId::PPlusOnePowProd, "pp1pow"},
}};

BigInt local_factor(FunctionId fid, const BigInt& p, unsigned a) {
  using boost::multiprecision::pow;
  switch (fid) {
    case FunctionId::Identity:
      return pow(p, a);
    case FunctionId::One:
      return 1;
    case FunctionId::Sigma:
      return (pow(p, a + 1) - 1) / (p - 1);
    case FunctionId::Phi:
      return pow(p, a - 1) * (p - 1);
    case FunctionId::Psi:
      return pow(p, a - 1) * (p + 1);
    case FunctionId::SigmaStar:
      return pow(p, a) + 1;
    case FunctionId::PhiStar:
      return pow(p, a) - 1;
    case FunctionId::SigmaExp: {
      BigInt sum = 0;
      for (unsigned d = 1; d <= a; ++d) {
        if (a % d == 0) {
          sum += pow(p, d);
        }
      }
      return sum;
    }
    case FunctionId::Rho:
      return pow(p, a - 1) * (p - 1) + 1;
    case FunctionId::PMinusOneProd:
      return p - 1;
    case FunctionId::PMinusOnePowProd:
      return pow(BigInt(p - 1), a);
    case FunctionId::PPlusOneProd:
      return p + 1;
    case FunctionId::PPlusOnePowProd:
      return pow(BigInt(p + 1), a);
    case FunctionId::GreatestPrimeFactor:
      break;
  }
  return 0;
}

bool checked_mul(std::uint64_t& acc, std::uint64_t factor) {
  return !__builtin_mul_overflow(acc, factor, &acc);
}

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out) {
  out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (!checked_mul(out, base)) {
      return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> small_local_factor(FunctionId fid, std::uint64_t p, unsigned a) {
  std::uint64_t pa = 0;
  std::uint64_t pa1 = 0;
  const bool pa_ok = checked_pow(p, a, pa);
  checked_pow(p, a - 1, pa1);  // p^(a-1) <= p^a, fits whenever pa_ok
  switch (fid) {
    case FunctionId::Identity:
      return pa_ok ? std::optional(pa) : std::nullopt;
    case FunctionId::One:
      return 1;
    case FunctionId::Sigma: {
      // 1 + p + ... + p^a, accumulated term by term.
      std::uint64_t sum = 1;
      std::uint64_t term = 1;
      for (unsigned i = 0; i < a; ++i) {
        if (!checked_mul(term, p) || __builtin_add_overflow(sum, term, &sum)) {
          return std::nullopt;
        }
      }
      return sum;
    }
    case FunctionId::Phi:
      return pa_ok ? std::optional(pa - pa1) : std::nullopt;
    case FunctionId::Psi: {
      std::uint64_t out = 0;
      if (!pa_ok || __builtin_add_overflow(pa, pa1, &out)) {
        return std::nullopt;
      }
      return out;
    }
    case FunctionId::SigmaStar:
      return pa_ok && pa != UINT64_MAX ? std::optional(pa + 1) : std::nullopt;
    case FunctionId::PhiStar:
      return pa_ok ? std::optional(pa - 1) : std::nullopt;
    case FunctionId::SigmaExp: {
      std::uint64_t sum = 0;
      for (unsigned d = 1; d <= a; ++d) {
        std::uint64_t pd = 0;
        if (a % d != 0) {
          continue;
        }
        if (!checked_pow(p, d, pd) || __builtin_add_overflow(sum, pd, &sum)) {
          return std::nullopt;
        }
      }
      return sum;
    }
    case FunctionId::Rho:
      return pa_ok ? std::optional(pa - pa1 + 1) : std::nullopt;
    case FunctionId::PMinusOneProd:
      return p - 1;
    case FunctionId::PMinusOnePowProd: {
      std::uint64_t out = 0;
      return checked_pow(p - 1, a, out) ? std::optional(out) : std::nullopt;
    }
    case FunctionId::PPlusOneProd:
      return p == UINT64_MAX ? std::nullopt : std::optional(p + 1);
    case FunctionId::PPlusOnePowProd: {
      std::uint64_t out = 0;
      if (p == UINT64_MAX || !checked_pow(p + 1, a, out)) {
        return std::nullopt;
      }
      return out;
    }
    case FunctionId::GreatestPrimeFactor:
      break;
  }
  return std::nullopt;
}

[[noreturn]] void throw_gpf_of_one() {
  throw DomainError("gpf(1) is undefined: 1 has no prime factor");
}

}  // namespace

std::string_view function_name(FunctionId fid) {
  for (const auto& entry : kNames) {
    if (entry.fid == fid) {
      return entry.name;
    }
  }
  return "?";
}

std::optional<FunctionId> function_from_name(std::string_view name) {
  const auto it = std::find_if(kNames.begin(), kNames.end(),
                               [name](const NameEntry& e) { return e.name == name; });
  if (it == kNames.end()) {
    return std::nullopt;
  }
  return it->fid;
}

bool is_multiplicative(FunctionId fid) {
  return fid != FunctionId::GreatestPrimeFactor;
}

BigInt eval_base(FunctionId fid, const Factorization& f) {
  if (fid == FunctionId::GreatestPrimeFactor) {
    if (f.empty()) {
      throw_gpf_of_one();
    }
    return f.pairs().back().prime;
  }
  BigInt product = 1;
  for (const auto& [p, a] : f) {
    product *= local_factor(fid, p, a);
  }
  return product;
}

std::optional<std::uint64_t> eval_base_small(FunctionId fid,
                                             std::span<const SmallPrimePower> f) {
  if (fid == FunctionId::GreatestPrimeFactor) {
    if (f.empty()) {
      throw_gpf_of_one();
    }
    return f.back().prime;
  }
  std::uint64_t product = 1;
  for (const auto& [p, a] : f) {
    const auto local = small_local_factor(fid, p, a);
    if (!local || !checked_mul(product, *local)) {
      return std::nullopt;
    }
  }
  return product;
}

}  // namespace arithcomp

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "arithcomp/factorization.hpp"

namespace arithcomp {

enum class FunctionId {
  Identity,
  One,
  Sigma,
  Phi,
  Psi,
  SigmaStar,
  PhiStar,
  SigmaExp,
  Rho,
  GreatestPrimeFactor,
  PMinusOneProd,
  PMinusOnePowProd,
  PPlusOneProd,
  PPlusOnePowProd,
};

inline constexpr std::array<FunctionId, 14> kAllFunctions = {
    FunctionId::Identity,         FunctionId::One,
    FunctionId::Sigma,            FunctionId::Phi,
    FunctionId::Psi,              FunctionId::SigmaStar,
    FunctionId::PhiStar,          FunctionId::SigmaExp,
    FunctionId::Rho,              FunctionId::GreatestPrimeFactor,
    FunctionId::PMinusOneProd,    FunctionId::PMinusOnePowProd,
    FunctionId::PPlusOneProd,     FunctionId::PPlusOnePowProd,
};

/// Lowercase grammar name: sigma, phi, psi, sigmastar, phistar, sigmae, rho,
/// gpf, pm1, pm1pow, pp1, pp1pow, n (identity), one.
std::string_view function_name(FunctionId fid);

std::optional<FunctionId> function_from_name(std::string_view name);

/// True for the functions with f(mn) = f(m) f(n) whenever gcd(m, n) = 1.
bool is_multiplicative(FunctionId fid);

/// Exact value from the prime-power formulas:
///   sigma(p^a) = (p^(a+1) - 1)/(p - 1)      phi(p^a) = p^a - p^(a-1)
///   psi(p^a)   = p^a + p^(a-1)              sigmastar(p^a) = p^a + 1
///   phistar(p^a) = p^a - 1                  sigmae(p^a) = sum_{d | a} p^d
///   rho(p^a)   = phi(p^a) + 1               pm1 / pm1pow: (p-1), (p-1)^a
///   pp1 / pp1pow: (p+1), (p+1)^a            gpf: largest p
/// Every function except gpf is 1 at n = 1; gpf(1) throws DomainError.
BigInt eval_base(FunctionId fid, const Factorization& f);

/// Same formulas in 64-bit arithmetic; nullopt when the value overflows.
std::optional<std::uint64_t> eval_base_small(FunctionId fid,
                                             std::span<const SmallPrimePower> f);

}  // namespace arithcomp

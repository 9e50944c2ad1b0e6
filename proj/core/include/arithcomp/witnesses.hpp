#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "arithcomp/factorization.hpp"
#include "arithcomp/functions.hpp"
#include "arithcomp/rational.hpp"

namespace arithcomp {

// Least primes in progressions -------------------------------------------

enum class Residue { PlusOne, MinusOne };

struct LinnikOptions {
  /// Largest candidate prime tried; 0 means 10^7 * modulus (saturating).
  std::uint64_t max_prime = 0;
};

/// Least prime p >= p_min with p = +-1 (mod modulus), found by walking the
/// progression. Throws SearchLimitError when the bound is exhausted.
std::uint64_t linnik_least_prime(std::uint64_t modulus, Residue residue, std::uint64_t p_min = 2,
                                 const LinnikOptions& options = {});

/// The least prime p = +-1 (mod k) plus the divisor-monotone comparison the
/// extremal-order argument rests on: k | p-1 forces sigma(p-1)/(p-1) >= sigma(k)/k,
/// and k | p+1 forces phi(p+1)/(p+1) <= phi(k)/k.
struct LinnikWitness {
  std::uint64_t modulus = 0;
  Residue residue = Residue::PlusOne;
  std::uint64_t p_min = 0;
  std::uint64_t search_bound = 0;
  std::uint64_t prime = 0;
  std::uint64_t steps = 0;
  /// log p / log k: the empirical exponent in p << k^c.
  double exponent = 0.0;
  /// sigma(k)/k and sigma(p-1)/(p-1) for +1; phi(k)/k and phi(p+1)/(p+1) for -1.
  ExactRational modulus_ratio;
  ExactRational shifted_ratio;
  bool monotone_holds = false;
};

LinnikWitness linnik_witness(std::uint64_t modulus, Residue residue, std::uint64_t p_min = 2,
                             const LinnikOptions& options = {});

// 2^p constructions ---------------------------------------------------------

inline constexpr std::uint64_t kDefaultMersenneMax = 61;

struct MersenneWitness {
  std::uint64_t p = 0;
  BigInt two_pow_p;
  BigInt mersenne;  // 2^p - 1 = phistar(2^p)
  Factorization mersenne_factors;
  BigInt phi_mersenne;
  BigInt phistar_mersenne;  // phistar(phistar(2^p))
  BigInt gpf;
  ExactRational phi_ratio;      // phi(2^p - 1) / 2^p
  ExactRational phistar_ratio;  // phistar(2^p - 1) / 2^p
  /// phistar(phistar(2^p)) / (log 2^p * loglog 2^p)
  double log_statistic = 0.0;
  /// phistar(2^p - 1) >= P(2^p - 1) - 1
  bool gpf_bound_holds = false;
  /// P(2^p - 1) / (p log p)
  double gpf_over_p_log_p = 0.0;
};

/// Throws std::invalid_argument when p is not prime and CapacityError when
/// p > max_p (max_p <= 63 so 2^p - 1 stays within the 64-bit factoring path).
MersenneWitness mersenne_witness(std::uint64_t p, std::uint64_t max_p = kDefaultMersenneMax);

// Repunits ---------------------------------------------------------------

/// (a^p - 1)/(a - 1). Throws std::invalid_argument unless a >= 2 and p is prime.
BigInt repunit(std::uint64_t a, std::uint64_t p);

struct RepunitRow {
  std::uint64_t p = 0;
  BigInt value;
  Factorization factors;
  /// sigma(a^(p-1)) == N(a, p); only an identity when a is prime.
  bool equals_sigma_of_power = false;
  /// F(N)/N for F = phi, phistar, sigmastar, sigma; all tend to 1 as p grows.
  std::array<double, 4> function_ratios{};
};

struct RepunitDemo {
  std::uint64_t a = 0;
  std::vector<RepunitRow> rows;
};

/// Repunits larger than 2^64 throw CapacityError.
RepunitDemo repunit_demo(std::uint64_t a, std::span<const std::uint64_t> primes);

struct Theorem5Row {
  std::uint64_t p = 0;
  BigInt repunit;  // sigma(q^(p-1)) = N(q, p)
  Factorization repunit_factors;
  BigInt h_value;  // h(N(q, p))
  BigInt q_power;  // q^(p-1)
  ExactRational ratio;
  double ratio_value = 0.0;
  /// |ratio - q/(q-1)|, evaluated exactly and then rounded.
  double gap = 0.0;
};

struct Theorem5Demo {
  std::uint64_t q = 0;
  FunctionId h = FunctionId::Sigma;
  ExactRational target;  // q/(q-1)
  std::vector<Theorem5Row> rows;
};

/// h(sigma(q^(p-1)))/q^(p-1) for each p. h must be sigma, psi, sigmastar or
/// sigmae; repunits above 2^64 throw CapacityError.
Theorem5Demo theorem5_demo(std::uint64_t q, FunctionId h, std::span<const std::uint64_t> primes);

// Primorial sequences ------------------------------------------------------

struct LandauRow {
  std::size_t k = 0;
  BigInt primorial;
  ExactRational phi_over_n;
  /// phi(n_k) loglog(n_k) / n_k
  double value = 0.0;
  /// value - e^-gamma
  double gap = 0.0;
};

/// Rows k = 2 .. k_max (loglog n_1 is negative). Throws std::invalid_argument
/// when k_max < 2.
std::vector<LandauRow> landau_primorial_sequence(std::size_t k_max);

struct DivergenceRow {
  std::size_t k = 0;
  BigInt primorial;
  ExactRational sigma_ratio;            // sigma(n_k)/n_k = prod (1 + 1/p)
  ExactRational sigmastar_sigma_ratio;  // sigmastar(sigma(n_k))/n_k
  ExactRational phi_product;            // prod (1 - 1/p)
  ExactRational phistar_phi_ratio;      // phistar(phi(n_k))/n_k
  bool lower_bound_holds = false;       // sigmastar(sigma(n_k))/n_k >= sigma(n_k)/n_k
  bool upper_bound_holds = false;       // phistar(phi(n_k))/n_k < prod (1 - 1/p)
};

/// Rows k = 2 .. k_max.
std::vector<DivergenceRow> divergence_demos(std::size_t k_max);

// Fermat primes --------------------------------------------------------------

inline constexpr std::array<std::uint64_t, 5> kFermatPrimes = {3, 5, 17, 257, 65537};

struct Theorem8Witness {
  BigInt m;     // 4 (2^32 - 1)
  BigInt half;  // m/2
  Factorization half_factors;
  bool factorization_matches = false;  // m/2 = 2 * 3 * 5 * 17 * 257 * 65537
  BigInt phistar_half;
  bool phistar_is_power = false;  // phistar(m/2) = 2^31
  BigInt sigmastar_value;         // sigmastar(phistar(m/2))
  ExactRational ratio;            // sigmastar(phistar(m/2)) / (m/2)
  ExactRational closed_form;      // (2^31 + 1) / (2 (2^32 - 1))
  ExactRational epsilon;          // 3 / (4 (2^32 - 1))
  ExactRational quarter_plus_epsilon;
  bool identity_holds = false;
  double epsilon_value = 0.0;
};

Theorem8Witness theorem8_exact();

/// n = F for each Fermat prime: phistar(phi(F))/F = phistar(phistar(F))/F = (F-2)/F,
/// the near-1 values of the unitary-totient compositions.
struct FermatRow {
  std::uint64_t fermat = 0;
  ExactRational phistar_phi_ratio;
  ExactRational phistar_phistar_ratio;
  ExactRational phi_phistar_ratio;
};

std::vector<FermatRow> fermat_exhibit();

}  // namespace arithcomp

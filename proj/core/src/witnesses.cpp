#include "arithcomp/witnesses.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arithcomp/composition.hpp"
#include "arithcomp/errors.hpp"
#include "arithcomp/expression.hpp"
#include "arithcomp/primes.hpp"
#include "arithcomp/ratio.hpp"

namespace arithcomp {

namespace {

constexpr std::uint64_t kDefaultLinnikFactor = 10'000'000;

ExactRational abs(const ExactRational& value) { return value < ExactRational(0) ? -value : value; }

Factorization raise(const Factorization& f, unsigned exponent) {
  std::vector<PrimePower> pairs;
  if (exponent == 0) {
    return {};
  }
  for (const auto& [p, a] : f) {
    pairs.push_back(PrimePower{p, a * exponent});
  }
  return Factorization::from_canonical(std::move(pairs));
}

Factorization squarefree_from(std::span<const std::uint64_t> primes) {
  std::vector<PrimePower> pairs;
  pairs.reserve(primes.size());
  for (std::uint64_t p : primes) {
    pairs.push_back(PrimePower{BigInt(p), 1});
  }
  return Factorization::from_canonical(std::move(pairs));
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(what) + " must be prime, got " + std::to_string(p));
  }
}

BigInt checked_repunit(std::uint64_t a, std::uint64_t p) {
  BigInt value = repunit(a, p);
  if (!to_u64(value)) {
    throw CapacityError("N(" + std::to_string(a) + ", " + std::to_string(p) +
                        ") exceeds the 64-bit factoring cap");
  }
  return value;
}

}  // namespace

std::uint64_t linnik_least_prime(std::uint64_t modulus, Residue residue, std::uint64_t p_min,
                                 const LinnikOptions& options) {
  return linnik_witness(modulus, residue, p_min, options).prime;
}

LinnikWitness linnik_witness(std::uint64_t modulus, Residue residue, std::uint64_t p_min,
                             const LinnikOptions& options) {
  if (modulus < 2) {
    throw std::invalid_argument("Linnik modulus must be >= 2");
  }
  LinnikWitness w;
  w.modulus = modulus;
  w.residue = residue;
  w.p_min = std::max<std::uint64_t>(p_min, 2);
  w.search_bound = options.max_prime;
  if (w.search_bound == 0) {
    w.search_bound = modulus > std::numeric_limits<std::uint64_t>::max() / kDefaultLinnikFactor
                         ? std::numeric_limits<std::uint64_t>::max()
                         : modulus * kDefaultLinnikFactor;
  }

  const std::uint64_t target = residue == Residue::PlusOne ? 1 % modulus : modulus - 1;
  std::uint64_t candidate = w.p_min + (target + modulus - w.p_min % modulus) % modulus;
  while (true) {
    if (candidate < w.p_min || candidate > w.search_bound) {
      throw SearchLimitError("no prime = " + std::string(residue == Residue::PlusOne ? "+1" : "-1") +
                             " (mod " + std::to_string(modulus) + ") in [" +
                             std::to_string(w.p_min) + ", " + std::to_string(w.search_bound) +
                             "]; search bound exhausted");
    }
    ++w.steps;
    if (is_prime(candidate)) {
      break;
    }
    candidate += modulus;  // wraps past the bound on overflow; caught above
  }
  w.prime = candidate;
  w.exponent = std::log(static_cast<double>(w.prime)) / std::log(static_cast<double>(modulus));

  const Factorization k_factors = factorize(BigInt(modulus));
  if (residue == Residue::PlusOne) {
    const BigInt shifted = w.prime - 1;
    w.modulus_ratio = ExactRational(eval_base(FunctionId::Sigma, k_factors), modulus);
    w.shifted_ratio = ExactRational(eval_base(FunctionId::Sigma, factorize(shifted)), shifted);
    w.monotone_holds = w.shifted_ratio >= w.modulus_ratio;
  } else {
    const BigInt shifted = BigInt(w.prime) + 1;
    w.modulus_ratio = ExactRational(eval_base(FunctionId::Phi, k_factors), modulus);
    w.shifted_ratio = ExactRational(eval_base(FunctionId::Phi, factorize(shifted)), shifted);
    w.monotone_holds = w.shifted_ratio <= w.modulus_ratio;
  }
  return w;
}

MersenneWitness mersenne_witness(std::uint64_t p, std::uint64_t max_p) {
  require_prime(p, "Mersenne exponent");
  if (p > max_p || p > 63) {
    throw CapacityError("Mersenne exponent " + std::to_string(p) + " exceeds cap " +
                        std::to_string(std::min<std::uint64_t>(max_p, 63)));
  }
  MersenneWitness w;
  w.p = p;
  w.two_pow_p = BigInt(1) << p;
  const Factorization power = Factorization::from_canonical({PrimePower{BigInt(2), static_cast<unsigned>(p)}});
  w.mersenne = eval_base(FunctionId::PhiStar, power);
  w.mersenne_factors = factorize(w.mersenne);
  w.phi_mersenne = eval_base(FunctionId::Phi, w.mersenne_factors);
  w.phistar_mersenne = eval_base(FunctionId::PhiStar, w.mersenne_factors);
  w.gpf = eval_base(FunctionId::GreatestPrimeFactor, w.mersenne_factors);
  w.phi_ratio = ExactRational(w.phi_mersenne, w.two_pow_p);
  w.phistar_ratio = ExactRational(w.phistar_mersenne, w.two_pow_p);

  const double log_n = static_cast<double>(p) * std::log(2.0);
  w.log_statistic = ratio_to_double(w.phistar_mersenne, 1) / (log_n * std::log(log_n));
  w.gpf_bound_holds = w.phistar_mersenne >= w.gpf - 1;
  const double dp = static_cast<double>(p);
  w.gpf_over_p_log_p = ratio_to_double(w.gpf, 1) / (dp * std::log(dp));
  return w;
}

BigInt repunit(std::uint64_t a, std::uint64_t p) {
  if (a < 2) {
    throw std::invalid_argument("repunit base must be >= 2");
  }
  require_prime(p, "repunit exponent");
  return (boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(p)) - 1) / (a - 1);
}

RepunitDemo repunit_demo(std::uint64_t a, std::span<const std::uint64_t> primes) {
  RepunitDemo demo;
  demo.a = a;
  const Factorization base = factorize(BigInt(a));
  for (std::uint64_t p : primes) {
    RepunitRow row;
    row.p = p;
    row.value = checked_repunit(a, p);
    row.factors = factorize(row.value);
    row.equals_sigma_of_power =
        eval_base(FunctionId::Sigma, raise(base, static_cast<unsigned>(p - 1))) == row.value;
    constexpr std::array<FunctionId, 4> kFunctions = {FunctionId::Phi, FunctionId::PhiStar,
                                                      FunctionId::SigmaStar, FunctionId::Sigma};
    for (std::size_t i = 0; i < kFunctions.size(); ++i) {
      row.function_ratios[i] = ratio_to_double(eval_base(kFunctions[i], row.factors), row.value);
    }
    demo.rows.push_back(std::move(row));
  }
  return demo;
}

Theorem5Demo theorem5_demo(std::uint64_t q, FunctionId h, std::span<const std::uint64_t> primes) {
  require_prime(q, "q");
  if (h != FunctionId::Sigma && h != FunctionId::Psi && h != FunctionId::SigmaStar &&
      h != FunctionId::SigmaExp) {
    throw std::invalid_argument("h must be sigma, psi, sigmastar or sigmae, got " +
                                std::string(function_name(h)));
  }
  Theorem5Demo demo;
  demo.q = q;
  demo.h = h;
  demo.target = ExactRational(q, q - 1);
  for (std::uint64_t p : primes) {
    Theorem5Row row;
    row.p = p;
    row.repunit = checked_repunit(q, p);
    row.repunit_factors = factorize(row.repunit);
    row.h_value = eval_base(h, row.repunit_factors);
    row.q_power = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(p - 1));
    row.ratio = ExactRational(row.h_value, row.q_power);
    row.ratio_value = row.ratio.to_double();
    row.gap = abs(row.ratio - demo.target).to_double();
    demo.rows.push_back(std::move(row));
  }
  return demo;
}

std::vector<LandauRow> landau_primorial_sequence(std::size_t k_max) {
  if (k_max < 2) {
    throw std::invalid_argument("landau sequence needs k_max >= 2");
  }
  const auto primes = first_primes(k_max);
  const double e_neg_gamma = reference_constants().e_neg_gamma;
  std::vector<LandauRow> rows;
  for (std::size_t k = 2; k <= k_max; ++k) {
    const Factorization f = squarefree_from(std::span(primes).first(k));
    LandauRow row;
    row.k = k;
    row.primorial = f.value();
    row.phi_over_n = ExactRational(eval_base(FunctionId::Phi, f), row.primorial);
    row.value = row.phi_over_n.to_double() * std::log(f.log_value());
    row.gap = row.value - e_neg_gamma;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DivergenceRow> divergence_demos(std::size_t k_max) {
  if (k_max < 2) {
    throw std::invalid_argument("divergence demos need k_max >= 2");
  }
  const auto primes = first_primes(k_max);
  std::vector<DivergenceRow> rows;
  // sigma(n_k) = prod (p + 1) and phi(n_k) = prod (p - 1), factored piecewise.
  Factorization sigma_factors = factorize(BigInt(primes[0] + 1));
  Factorization phi_factors;
  for (std::size_t k = 2; k <= k_max; ++k) {
    const std::uint64_t p = primes[k - 1];
    sigma_factors = sigma_factors * factorize(BigInt(p + 1));
    phi_factors = phi_factors * factorize(BigInt(p - 1));

    const Factorization n_factors = squarefree_from(std::span(primes).first(k));
    DivergenceRow row;
    row.k = k;
    row.primorial = n_factors.value();
    const BigInt sigma_n = eval_base(FunctionId::Sigma, n_factors);
    const BigInt phi_n = eval_base(FunctionId::Phi, n_factors);
    if (sigma_factors.value() != sigma_n || phi_factors.value() != phi_n) {
      throw std::logic_error("piecewise factorization disagrees with sigma/phi of n_k");
    }
    row.sigma_ratio = ExactRational(sigma_n, row.primorial);
    row.sigmastar_sigma_ratio =
        ExactRational(eval_base(FunctionId::SigmaStar, sigma_factors), row.primorial);
    row.phi_product = ExactRational(phi_n, row.primorial);
    row.phistar_phi_ratio =
        ExactRational(eval_base(FunctionId::PhiStar, phi_factors), row.primorial);
    row.lower_bound_holds = row.sigmastar_sigma_ratio >= row.sigma_ratio;
    row.upper_bound_holds = row.phistar_phi_ratio < row.phi_product;
    rows.push_back(std::move(row));
  }
  return rows;
}

Theorem8Witness theorem8_exact() {
  Theorem8Witness w;
  const BigInt two_32_minus_1 = (BigInt(1) << 32) - 1;
  w.m = 4 * two_32_minus_1;
  w.half = w.m / 2;
  w.half_factors = factorize(w.half);

  std::vector<PrimePower> expected{{BigInt(2), 1}};
  for (std::uint64_t f : kFermatPrimes) {
    expected.push_back(PrimePower{BigInt(f), 1});
  }
  w.factorization_matches = w.half_factors == Factorization(std::move(expected));

  w.phistar_half = eval_base(FunctionId::PhiStar, w.half_factors);
  w.phistar_is_power = w.phistar_half == (BigInt(1) << 31);
  w.sigmastar_value = eval_base(FunctionId::SigmaStar, factorize(w.phistar_half));
  w.ratio = ExactRational(w.sigmastar_value, w.half);
  w.closed_form = ExactRational((BigInt(1) << 31) + 1, 2 * two_32_minus_1);
  w.epsilon = ExactRational(3, 4 * two_32_minus_1);
  w.quarter_plus_epsilon = ExactRational(1, 4) + w.epsilon;
  w.identity_holds = w.ratio == w.closed_form && w.ratio == w.quarter_plus_epsilon;
  w.epsilon_value = (w.ratio - ExactRational(1, 4)).to_double();
  return w;
}

std::vector<FermatRow> fermat_exhibit() {
  const Composition phistar_phi = parse_composition("phistar(phi(n))");
  const Composition phistar_phistar = parse_composition("phistar_2(n)");
  const Composition phi_phistar = parse_composition("phi(phistar(n))");
  std::vector<FermatRow> rows;
  for (std::uint64_t f : kFermatPrimes) {
    rows.push_back(FermatRow{f, ExactRational(eval_composition(phistar_phi, f), f),
                             ExactRational(eval_composition(phistar_phistar, f), f),
                             ExactRational(eval_composition(phi_phistar, f), f)});
  }
  return rows;
}

}  // namespace arithcomp

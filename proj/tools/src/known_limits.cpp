#include <algorithm>

#include "arithcomp/cli.hpp"
#include "arithcomp/ratio.hpp"

namespace arithcomp::cli {

namespace {

using F = FunctionId;

// Single-stage composition f(n), with n itself as the empty composition.
std::optional<F> single(const Composition& c) {
  if (c.stages.empty()) {
    return F::Identity;
  }
  if (c.stages.size() == 1 && c.stages[0].iterations == 1) {
    return c.stages[0].fid;
  }
  return std::nullopt;
}

// outer(inner(n)) with both single stages; inner may be the identity.
std::optional<std::pair<F, F>> outer_inner(const Composition& c) {
  if (c.stages.empty() || c.stages[0].iterations != 1) {
    return std::nullopt;
  }
  Composition rest{std::vector<Stage>(c.stages.begin() + 1, c.stages.end())};
  const auto inner = single(rest);
  if (!inner) {
    return std::nullopt;
  }
  return std::pair{c.stages[0].fid, *inner};
}

bool one_of(F fid, std::initializer_list<F> set) {
  return std::find(set.begin(), set.end(), fid) != set.end();
}

// Functions with f(n) <= n and f(p) = p - 1.
bool shrinking(F fid) {
  return one_of(fid, {F::Identity, F::Phi, F::PhiStar, F::PMinusOneProd, F::PMinusOnePowProd});
}

// Functions with g(n) >= n and g(p) = p + 1 (or g(p) = p and multiplicative).
bool growing(F fid) {
  return one_of(fid, {F::Identity, F::Sigma, F::SigmaStar, F::Psi, F::SigmaExp,
                      F::PPlusOnePowProd});
}

}  // namespace

std::optional<KnownLimit> known_limit(const RatioSpec& spec) {
  const Constants c = reference_constants();
  const auto num = outer_inner(spec.numerator);
  if (!num) {
    return std::nullopt;
  }
  const auto [outer, inner] = *num;
  const Composition inner_comp{std::vector<Stage>(spec.numerator.stages.begin() + 1,
                                                  spec.numerator.stages.end())};
  const bool over_n = spec.denominator.stages.empty();
  const bool over_inner = spec.denominator == inner_comp;
  const bool log_at_n_or_inner =
      spec.log_arg == LogArgument::N ||
      (spec.log_arg == LogArgument::DenominatorValue && over_inner);

  // sigma(f(n)) / (n loglog n) and psi(f(n)) / (n loglog n).
  if (spec.log_exp == 0 && spec.loglog_exp == -1 && shrinking(inner) && (over_n || over_inner) &&
      log_at_n_or_inner) {
    if (outer == F::Sigma) {
      return KnownLimit{"e^gamma", c.e_gamma, "limsup"};
    }
    if (outer == F::Psi) {
      return KnownLimit{"(6/pi^2) e^gamma", c.six_over_pi2_e_gamma, "limsup"};
    }
  }
  // sigma(f(n)) / (phi(f(n)) (loglog n)^2), psi likewise.
  if (spec.log_exp == 0 && spec.loglog_exp == -2 && shrinking(inner) &&
      spec.denominator.stages.size() == inner_comp.stages.size() + 1 &&
      spec.denominator.stages[0] == Stage{F::Phi, 1} &&
      std::equal(inner_comp.stages.begin(), inner_comp.stages.end(),
                 spec.denominator.stages.begin() + 1) &&
      spec.log_arg == LogArgument::N) {
    if (outer == F::Sigma) {
      return KnownLimit{"e^(2 gamma)", c.e_2gamma, "limsup"};
    }
    if (outer == F::Psi) {
      return KnownLimit{"(6/pi^2) e^(2 gamma)", c.six_over_pi2_e_2gamma, "limsup"};
    }
  }
  // phi(g(n)) loglog n / n.
  if (spec.log_exp == 0 && spec.loglog_exp == 1 && outer == F::Phi && growing(inner) &&
      (over_n || over_inner) && log_at_n_or_inner) {
    return KnownLimit{"e^-gamma", c.e_neg_gamma, "liminf"};
  }
  if (spec.log_exp != 0 || spec.loglog_exp != 0 || !over_n) {
    return std::nullopt;
  }
  // Plain ratios over n.
  if (inner == F::Sigma && one_of(outer, {F::Sigma, F::Psi, F::SigmaStar, F::SigmaExp})) {
    return KnownLimit{"1", 1.0, "liminf"};
  }
  if ((outer == F::Phi && inner == F::PhiStar) || (outer == F::PhiStar && inner == F::Phi) ||
      (outer == F::PhiStar && inner == F::PhiStar)) {
    return KnownLimit{"1", 1.0, "limsup"};
  }
  if (outer == F::Phi && inner == F::Phi) {
    return KnownLimit{"1/2", 0.5, "limsup"};
  }
  return std::nullopt;
}

}  // namespace arithcomp::cli

#pragma once

#include "arithcomp/composition.hpp"

namespace arithcomp {

/// Which integer X the log factors of a RatioSpec are taken of.
enum class LogArgument { N, NumeratorValue, DenominatorValue };

/// ratio(n) = num(n) / den(n) * (log X)^log_exp * (loglog X)^loglog_exp.
/// Exponents are signed, so "phi(n)*loglog(n)/n" has loglog_exp = +1 and
/// "sigma(n)/(n*loglog(n))" has loglog_exp = -1.
struct RatioSpec {
  Composition numerator;
  Composition denominator{{Stage{FunctionId::One, 1}}};
  int log_exp = 0;
  int loglog_exp = 0;
  LogArgument log_arg = LogArgument::N;

  friend bool operator==(const RatioSpec&, const RatioSpec&) = default;
};

}  // namespace arithcomp

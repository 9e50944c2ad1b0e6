#include "arithcomp/ratio.hpp"

#include <cmath>
#include <cstdio>

#include "arithcomp/errors.hpp"
#include "arithcomp/expression.hpp"

namespace arithcomp {

namespace {

std::string argument_text(const RatioSpec& spec) {
  switch (spec.log_arg) {
    case LogArgument::N: return "n";
    case LogArgument::NumeratorValue: return to_string(spec.numerator);
    case LogArgument::DenominatorValue: return to_string(spec.denominator);
  }
  return "?";
}

}  // namespace

double normalize_ratio(const BigInt& numerator, const BigInt& denominator, double log_x,
                       int log_exp, int loglog_exp) {
  double value = ratio_to_double(numerator, denominator);
  if (log_exp != 0) {
    value *= std::pow(log_x, log_exp);
  }
  if (loglog_exp != 0) {
    value *= std::pow(std::log(log_x), loglog_exp);
  }
  return value;
}

RatioValue evaluate_ratio(const RatioSpec& spec, const BigInt& n, const Evaluator& evaluator) {
  RatioValue result;
  result.numerator = evaluator.evaluate(spec.numerator, n);
  result.denominator = evaluator.evaluate(spec.denominator, n);
  if (result.denominator < 1) {
    throw DomainError("denominator " + to_string(spec.denominator) + " evaluated to " +
                      result.denominator.str());
  }

  double log_x = 0.0;
  if (spec.log_exp != 0 || spec.loglog_exp != 0) {
    const BigInt& x = spec.log_arg == LogArgument::N                ? n
                      : spec.log_arg == LogArgument::NumeratorValue ? result.numerator
                                                                    : result.denominator;
    const std::string arg = argument_text(spec);
    if (spec.log_exp != 0 && x < 2) {
      throw DomainError("log(" + arg + ") is not positive at value " + x.str());
    }
    if (spec.loglog_exp != 0 && x < 3) {
      throw DomainError("loglog(" + arg + ") is undefined or not positive at value " +
                        x.str());
    }
    log_x = evaluator.factor(x).log_value();
  }
  result.ratio = normalize_ratio(result.numerator, result.denominator, log_x, spec.log_exp,
                                 spec.loglog_exp);
  return result;
}

double eval_ratio(const RatioSpec& spec, const BigInt& n) {
  return evaluate_ratio(spec, n, Evaluator{}).ratio;
}

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace arithcomp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "arithcomp/errors.hpp"
#include "arithcomp/expression.hpp"
#include "arithcomp/factorization.hpp"
#include "arithcomp/primes.hpp"
#include "arithcomp/ratio.hpp"
#include "oracles.hpp"

using namespace arithcomp;

namespace {

// Distance in units in the last place between two finite doubles of equal sign.
std::int64_t ulps(double a, double b) {
  std::int64_t ia = 0;
  std::int64_t ib = 0;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  return ia > ib ? ia - ib : ib - ia;
}

const RatioSpec kGronwall = parse_ratio("sigma(n)/(n*loglog(n))");

}  // namespace

TEST_CASE("reference constants against a 40-digit evaluation") {
  constexpr Constants c = reference_constants();
  // Decimal expansions to 40 digits; each literal rounds to the nearest double.
  CHECK(c.gamma == 0.5772156649015328606065120900824024310422);
  CHECK(c.e_gamma == 1.78107241799019798523650410310717954917);
  CHECK(c.e_neg_gamma == 0.5614594835668851698241432147908807867657);
  CHECK(c.e_2gamma == 3.172218958125450527727913409069474977123);
  CHECK(c.six_over_pi2 == 0.6079271018540266286632767792583658334262);
  CHECK(c.six_over_pi2_e_gamma == 1.082762193260924580122188038190926570184);
  CHECK(c.six_over_pi2_e_2gamma == 1.92847787765960499583016140437870111954);

  CHECK(c.gamma == 0.5772156649015329);
  CHECK(std::abs(c.e_gamma * c.e_neg_gamma - 1.0) <= 1e-15);
  CHECK(ulps(c.six_over_pi2, 6.0 / (std::numbers::pi * std::numbers::pi)) <= 1);
  CHECK(ulps(c.e_gamma, std::exp(c.gamma)) <= 1);
  CHECK(ulps(c.e_neg_gamma, std::exp(-c.gamma)) <= 1);
  CHECK(ulps(c.e_2gamma, std::exp(2 * c.gamma)) <= 1);
  CHECK(ulps(c.six_over_pi2_e_gamma, c.six_over_pi2 * c.e_gamma) <= 1);
  CHECK(ulps(c.six_over_pi2_e_2gamma, c.six_over_pi2 * c.e_2gamma) <= 1);
}

TEST_CASE("eval_ratio examples") {
  CHECK(eval_ratio(kGronwall, 12) == doctest::Approx(2.563440313761713).epsilon(1e-13));
  CHECK(eval_ratio(kGronwall, 12) == doctest::Approx(2.563).epsilon(5e-4));

  const RatioSpec landau = parse_ratio("phi(n)*loglog(n)/n");
  CHECK(eval_ratio(landau, primorial(15)) == doctest::Approx(0.515).epsilon(0.005 / 0.515));

  const RatioSpec edge = parse_ratio("sigma(phistar(n))/(n*loglog(n))");
  const double at3 = eval_ratio(edge, 3);
  CHECK(std::isfinite(at3));
  CHECK(at3 > 0);
  CHECK(at3 == doctest::Approx(3.0 / (3.0 * std::log(std::log(3.0)))));
}

TEST_CASE("evaluate_ratio returns exact parts") {
  const Evaluator evaluator;
  const RatioValue v = evaluate_ratio(parse_ratio("sigma(phistar(n))/(n*loglog(n))"), 360, evaluator);
  CHECK(v.numerator == 504);
  CHECK(v.denominator == 360);
  CHECK(v.ratio == doctest::Approx(504.0 / (360.0 * std::log(std::log(360.0)))).epsilon(1e-14));

  const RatioValue w = evaluate_ratio(parse_ratio("phistar(phi(n))/n"), 257, evaluator);
  CHECK(w.numerator == 255);
  CHECK(w.denominator == 257);
  CHECK(w.ratio == 255.0 / 257.0);
}

TEST_CASE("log factors of huge arguments use the factorization") {
  const BigInt n = primorial(300);  // far beyond double range
  const RatioSpec spec = parse_ratio("phi(n)*loglog(n)/n");
  double log_n = 0;
  for (auto p : first_primes(300)) {
    log_n += std::log(static_cast<double>(p));
  }
  double phi_over_n = 1;
  for (auto p : first_primes(300)) {
    phi_over_n *= 1.0 - 1.0 / static_cast<double>(p);
  }
  CHECK(eval_ratio(spec, n) == doctest::Approx(phi_over_n * std::log(log_n)).epsilon(1e-12));
}

TEST_CASE("undefined log factors are domain errors") {
  CHECK_THROWS_AS(eval_ratio(kGronwall, 2), DomainError);
  CHECK_THROWS_AS(eval_ratio(kGronwall, 1), DomainError);
  CHECK_THROWS_AS(eval_ratio(parse_ratio("sigma(n)/(n*log(n))"), 1), DomainError);
  CHECK_NOTHROW(eval_ratio(parse_ratio("sigma(n)/(n*log(n))"), 2));
  // log of phi(n) at n = 2 is log 1.
  CHECK_THROWS_AS(eval_ratio(parse_ratio("sigma(n)/(phi(n)*log(phi(n)))"), 2), DomainError);
  // No log factors: any n >= 1 works.
  CHECK(eval_ratio(parse_ratio("sigma(n)/n"), 1) == 1.0);
}

TEST_CASE("scaling coherence for phistar") {
  const RatioSpec over_n = parse_ratio("sigma(phistar(n))/(n*loglog(n))");
  const RatioSpec over_f = parse_ratio("sigma(phistar(n))/(phistar(n)*loglog(phistar(n)))");
  int checked = 0;
  for (std::uint64_t n = 3; n <= 10000; ++n) {
    if (oracle::phi_star_formula(n) < 3) {
      continue;
    }
    REQUIRE(eval_ratio(over_n, n) <= eval_ratio(over_f, n));
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("scan_records examples") {
  const RecordTable gronwall = scan_records(kGronwall, 10, 10000, ScanMode::Max);
  REQUIRE(gronwall.entries.size() == 2);
  CHECK(gronwall.entries[0].n == 10);
  CHECK(gronwall.entries[1].n == 12);
  CHECK(gronwall.entries[1].numerator == 28);
  CHECK(gronwall.entries[1].denominator == 12);
  CHECK(gronwall.entries[1].ratio == doctest::Approx(2.5634).epsilon(1e-4));

  const RecordTable f2 = scan_records(parse_ratio("phistar(phi(n))/n"), 2, 10000, ScanMode::Max);
  std::vector<std::uint64_t> ns;
  for (const auto& e : f2.entries) {
    ns.push_back(e.n);
  }
  CHECK(ns == std::vector<std::uint64_t>{2, 5, 17, 257});
  CHECK(f2.entries.back().numerator == 255);
  CHECK(f2.entries.back().ratio == doctest::Approx(0.99222).epsilon(1e-5));

  CHECK_THROWS_AS(scan_records(kGronwall, 5, 4, ScanMode::Max), std::invalid_argument);
  CHECK_THROWS_AS(scan_records(kGronwall, 2, 40, ScanMode::Max), std::invalid_argument);
  CHECK_NOTHROW(scan_records(parse_ratio("sigma(n)/n"), 1, 10, ScanMode::Min));
}

TEST_CASE("scan matches a brute-force champion scan") {
  // Independent champions of sigma(n)/n over [1, 5000], compared exactly by
  // cross-multiplication.
  std::vector<std::uint64_t> expected;
  std::uint64_t best_num = 0;
  std::uint64_t best_den = 1;
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const std::uint64_t s = oracle::sigma(n);
    if (expected.empty() || s * best_den > best_num * n) {
      expected.push_back(n);
      best_num = s;
      best_den = n;
    }
  }
  const RecordTable table = scan_records(parse_ratio("sigma(n)/n"), 1, 5000, ScanMode::Max);
  std::vector<std::uint64_t> got;
  for (const auto& e : table.entries) {
    got.push_back(e.n);
  }
  CHECK(got == expected);
}

TEST_CASE("record tables are monotone, deterministic and exact") {
  const char* specs[] = {"sigma(n)/(n*loglog(n))", "phi(n)*loglog(n)/n",
                         "psi(phi(n))/(n*loglog(n))", "sigma(pm1(n))/(phi(pm1(n))*loglog(n)^2)",
                         "phistar(phistar(n))/(log(n)*loglog(n))"};
  for (const char* text : specs) {
    const RatioSpec spec = parse_ratio(text);
    for (ScanMode mode : {ScanMode::Max, ScanMode::Min}) {
      INFO(std::string(text));
      const RecordTable one = scan_records(spec, 3, 20000, mode, {.workers = 1});
      for (unsigned workers : {2u, 3u, 7u}) {
        REQUIRE(scan_records(spec, 3, 20000, mode, {.workers = workers}) == one);
      }
      std::ostringstream a;
      std::ostringstream b;
      write_records_csv(a, one);
      write_records_csv(b, scan_records(spec, 3, 20000, mode, {.workers = 4}));
      REQUIRE(a.str() == b.str());

      for (std::size_t i = 1; i < one.entries.size(); ++i) {
        REQUIRE(one.entries[i - 1].n < one.entries[i].n);
        if (mode == ScanMode::Max) {
          REQUIRE(one.entries[i - 1].ratio < one.entries[i].ratio);
        } else {
          REQUIRE(one.entries[i - 1].ratio > one.entries[i].ratio);
        }
      }
      for (const auto& e : one.entries) {
        // Logs are summed over the factorization of n.
        REQUIRE(normalize_ratio(e.numerator, e.denominator, factorize(e.n).log_value(),
                                spec.log_exp, spec.loglog_exp) == e.ratio);
        const double log_x = std::log(static_cast<double>(e.n));
        double independent = static_cast<double>(e.numerator) / static_cast<double>(e.denominator);
        independent *= std::pow(log_x, spec.log_exp) * std::pow(std::log(log_x), spec.loglog_exp);
        REQUIRE(e.ratio == doctest::Approx(independent).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("domain errors during a scan") {
  const RatioSpec spec = parse_ratio("gpf(phi(n))/n");
  CHECK_THROWS_AS(scan_records(spec, 1, 100, ScanMode::Max), DomainError);
  const RecordTable table =
      scan_records(spec, 1, 100, ScanMode::Max, {.workers = 3, .skip_domain_errors = true});
  REQUIRE(table.skipped.size() == 2);
  CHECK(table.skipped[0].n == 1);
  CHECK(table.skipped[1].n == 2);
  CHECK(table.entries.front().n == 3);
}

TEST_CASE("record CSV layout") {
  const RecordTable table = scan_records(kGronwall, 10, 100, ScanMode::Max);
  std::ostringstream csv;
  write_records_csv(csv, table);
  CHECK(csv.str() ==
        "n,numerator,denominator,ratio\n"
        "10,18,10,2.15818942087\n"
        "12,28,12,2.56344031376\n");
  std::ostringstream tsv;
  write_records_csv(tsv, table, '\t');
  CHECK(tsv.str().substr(0, 30) == "n\tnumerator\tdenominator\tratio\n");
  CHECK(format_float(0.99221789883268485) == "0.992217898833");
}

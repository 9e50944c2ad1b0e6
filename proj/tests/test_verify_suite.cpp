#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "arithcomp/verify.hpp"
#include "oracles.hpp"

using namespace arithcomp;
using F = FunctionId;

TEST_CASE("chain holds and reports the checked range") {
  const PropertyReport small = verify_chain(12);
  CHECK(small.held());
  CHECK(small.success());
  CHECK(small.cases_checked == 12);
  CHECK(small.to == 12);
  // Independent values at n = 12: 4 <= 6 <= 12 <= 20 <= 24 <= 28.
  CHECK(oracle::phi(12) == 4);
  CHECK(oracle::phi_star(12) == 6);
  CHECK(oracle::sigma_star(12) == 20);
  CHECK(oracle::psi(12) == 24);
  CHECK(oracle::sigma(12) == 28);

  CHECK(verify_chain(1).held());
  CHECK_THROWS_AS(verify_chain(0), std::invalid_argument);

  const PropertyReport full = verify_chain(1'000'000, {.workers = 3});
  CHECK(full.held());
  CHECK(full.cases_checked == 1'000'000);
}

TEST_CASE("divisor monotonicity relations") {
  for (DivisorRelation r : kAllRelations) {
    CHECK(relation_from_name(relation_name(r)) == r);
    const PropertyReport report = verify_divisor_monotonicity(20000, r);
    INFO(std::string(relation_name(r)));
    CHECK(report.held());
    CHECK(report.cases_checked > 20000);
  }
  CHECK(relation_name(DivisorRelation::PhiOverNDown) == "phi_over_n_down");
  CHECK_FALSE(relation_from_name("sigma_up").has_value());
  CHECK_THROWS_AS(verify_divisor_monotonicity(1, DivisorRelation::SigmaOverNUp),
                  std::invalid_argument);
  // Pair examples, independently: 3/2 <= 7/4 and 2/3 >= 1/3 (as 4/12).
  CHECK(oracle::sigma(2) * 4 <= oracle::sigma(4) * 2);
  CHECK(oracle::phi(3) * 12 >= oracle::phi(12) * 3);
}

TEST_CASE("every proper divisor pair is compared") {
  std::uint64_t pairs = 0;
  for (std::uint64_t t = 1; t <= 3000; ++t) {
    pairs += oracle::divisors(t).size() - 1;  // s = t is trivially fine
  }
  CHECK(verify_divisor_monotonicity(3000, DivisorRelation::SigmaOverNUp).cases_checked == pairs);
}

TEST_CASE("monotonicity results do not depend on worker count") {
  for (DivisorRelation r : kAllRelations) {
    const auto a = verify_divisor_monotonicity(5000, r, {.workers = 1});
    const auto b = verify_divisor_monotonicity(5000, r, {.workers = 4});
    CHECK(a.violations == b.violations);
    CHECK(a.cases_checked == b.cases_checked);
  }
}

TEST_CASE("sigmastar counterexample search") {
  // Brute-force oracle: lexicographically smallest s | t <= 100 with
  // sigmastar(s) * t > sigmastar(t) * s.
  std::pair<std::uint64_t, std::uint64_t> expected{0, 0};
  for (std::uint64_t s = 1; s <= 100 && expected.first == 0; ++s) {
    for (std::uint64_t t = s; t <= 100; t += s) {
      if (oracle::sigma_star(s) * t > oracle::sigma_star(t) * s) {
        expected = {s, t};
        break;
      }
    }
  }
  CHECK(expected == std::pair<std::uint64_t, std::uint64_t>{2, 4});

  for (std::uint64_t limit : {4, 10, 100}) {
    const PropertyReport report = find_sigma_star_counterexample(limit);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].n == 2);
    CHECK(report.violations[0].m == 4);
    CHECK(report.success());
    CHECK_FALSE(report.held());
  }
  const PropertyReport none = find_sigma_star_counterexample(3);
  CHECK(none.inconclusive());
  CHECK_FALSE(none.success());
}

TEST_CASE("sieve path equals direct path") {
  CHECK(verify_sieve_vs_direct(100000, std::array{F::Sigma}).held());
  CHECK(verify_sieve_vs_direct(100, std::array{F::Rho}).held());
  CHECK(verify_sieve_vs_direct(2).held());
  const PropertyReport all = verify_sieve_vs_direct(20000);
  CHECK(all.held());
  CHECK_THROWS_AS(verify_sieve_vs_direct(1), std::invalid_argument);
}

TEST_CASE("unitary parity against enumeration") {
  const PropertyReport report = verify_unitary_parity(10000);
  CHECK(report.held());
  CHECK(report.cases_checked == 10000);
}

TEST_CASE("reports are deterministic and serialize") {
  const auto a = find_sigma_star_counterexample(100);
  const auto b = find_sigma_star_counterexample(100);
  std::ostringstream ta;
  std::ostringstream tb;
  write_property_text(ta, a);
  write_property_text(tb, b);
  CHECK(ta.str() == tb.str());
  CHECK(ta.str().find("counterexample found") != std::string::npos);
  CHECK(ta.str().find("n=2 m=4") != std::string::npos);
  CHECK(ta.str().find("wall_time") == std::string::npos);

  std::ostringstream timed;
  write_property_text(timed, a, true);
  CHECK(timed.str().find("wall_time_s:") != std::string::npos);

  std::ostringstream csv;
  write_violations_csv(csv, a);
  CHECK(csv.str().rfind("n,m,detail\n2,4,", 0) == 0);

  std::ostringstream chain;
  write_property_text(chain, verify_chain(50));
  CHECK(chain.str().find("violations: 0") != std::string::npos);
}

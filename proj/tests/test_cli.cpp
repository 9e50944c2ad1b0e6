#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arithcomp/cli.hpp"
#include "arithcomp/expression.hpp"
#include "arithcomp/ratio.hpp"

using namespace arithcomp;
using arithcomp::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("arithcomp_test_cli_" + name);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval") {
  Run r = run({"eval", "sigma(phistar(n))", "360"});
  CHECK(r.code == 0);
  CHECK(r.out == "504\nfactorization: 2^3 * 3^2 * 7\n");
  CHECK(run({"eval", "phi_2(n)", "100"}).out.rfind("16\n", 0) == 0);
  CHECK(run({"eval", "n", "7"}).out.rfind("7\n", 0) == 0);
  // Beyond 64 bits: phistar(2^100) = 2^100 - 1.
  CHECK(run({"eval", "phistar(n)", "1267650600228229401496703205376"}).out.rfind(
            "1267650600228229401496703205375\n", 0) == 0);

  r = run({"eval", "sigmma(n)", "5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "sigma"));
  CHECK(run({"eval", "sigma(n)", "0"}).code == 2);
  CHECK(run({"eval", "sigma(n)", "12x"}).code == 2);
  CHECK(run({"eval", "sigma(n)/n", "12"}).code == 2);
  r = run({"eval", "gpf(n)", "1"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(run({"eval", "sigma(n)"}).code == 2);
}

TEST_CASE("scan") {
  Run r = run({"scan", "sigma(n)/(n*loglog(n))", "10", "10000", "max"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,numerator,denominator,ratio\n10,18,10,2.15818942087\n12,28,12,2.56344031376\n");
  CHECK(contains(r.err, "champion: n=12 ratio=2.56344031376"));
  CHECK(contains(r.err, "reference: limsup = e^gamma"));

  r = run({"scan", "phistar(phi(n))/n", "--from", "2", "--to", "10000", "--mode", "max"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\n257,255,257,0.992217898833\n"));
  CHECK(contains(r.err, "limsup = 1"));

  CHECK(run({"scan", "sigma(n)/(n*loglog(n))", "5", "4"}).code == 2);
  CHECK(run({"scan", "sigma(n)/(n*loglog(n))", "2", "40"}).code == 2);
  CHECK(run({"scan", "sigma(n)/(n*loglog(n))", "10", "40", "sideways"}).code == 2);

  r = run({"scan", "sigma(n)/(phi(n)*loglog(phi(n)))", "3", "50"});
  CHECK(r.code == 1);
  r = run({"scan", "sigma(n)/(phi(n)*loglog(phi(n)))", "3", "50", "--skip-domain-errors"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning: skipped n=3"));
}

TEST_CASE("scan writes deterministic files") {
  const auto a = temp_path("scan_a.csv");
  const auto b = temp_path("scan_b.tsv");
  Run r = run({"scan", "phi(n)*loglog(n)/n", "3", "30000", "min", "--out", a.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "reference: liminf = e^-gamma"));
  const std::string first = slurp(a);
  CHECK(run({"scan", "phi(n)*loglog(n)/n", "3", "30000", "min", "--out", a.string()}).code == 0);
  CHECK(slurp(a) == first);
  CHECK(run({"scan", "phi(n)*loglog(n)/n", "3", "30000", "min", "--out", b.string(), "--format",
             "tsv"})
            .code == 0);
  std::string tsv = slurp(b);
  std::replace(tsv.begin(), tsv.end(), '\t', ',');
  CHECK(tsv == first);
  CHECK(first.find('\r') == std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("figure") {
  const Run f1 = run({"figure", "1"});
  CHECK(f1.code == 0);
  CHECK(f1.out.rfind("n,sigma_phistar_n,egamma_n_loglog_n\n10,7,", 0) == 0);
  CHECK(contains(f1.out, "\n360,504,1136.56278918\n"));
  CHECK(std::count(f1.out.begin(), f1.out.end(), '\n') == 1 + 9991);

  const Run f2 = run({"figure", "2"});
  CHECK(contains(f2.out, "\n257,255,257\n"));
  CHECK(f2.out.rfind("n,phistar_phi_n,n_line\n1,1,1\n2,1,2\n", 0) == 0);
  const Run f3 = run({"figure", "3"});
  CHECK(f3.out.rfind("n,sigmastar_phi_n\n1,1\n", 0) == 0);
  CHECK(std::count(f3.out.begin(), f3.out.end(), '\n') == 1 + 10000);

  for (int id : {1, 2, 3}) {
    std::ostringstream one;
    std::ostringstream many;
    cli::write_figure(id, one, ',', 1);
    cli::write_figure(id, many, ',', 5);
    CHECK(one.str() == many.str());
  }
  CHECK(run({"figure", "4"}).code == 2);
  CHECK(run({"figure", "1", "--out", "/nonexistent-dir/f.csv"}).code == 1);

  const auto path = temp_path("fig3.csv");
  const Run w = run({"figure", "3", "--out", path.string()});
  CHECK(w.code == 0);
  CHECK(slurp(path) == f3.out);
  std::filesystem::remove(path);
}

TEST_CASE("witness") {
  Run r = run({"witness", "theorem8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1/4 + 3/(4(2^32-1))"));
  CHECK(contains(r.out, "phistar_m_half: 2147483648"));
  CHECK(contains(r.out, "1.74622982781e-10"));
  CHECK_FALSE(contains(r.out, "[FAIL]"));

  r = run({"witness", "mersenne", "--p", "13"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "phistar_2p: 8191"));
  CHECK(contains(r.out, "phistar_2p_prime: true"));

  r = run({"witness", "linnik", "--mod", "2310", "--residue", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "prime: 2311"));
  r = run({"witness", "linnik", "--mod", "30", "--residue", "-1"});
  CHECK(contains(r.out, "prime: 29"));
  CHECK(run({"witness", "linnik"}).code == 2);
  CHECK(run({"witness", "linnik", "--mod", "30", "--residue", "2"}).code == 2);

  for (const char* name : {"mersenne", "repunit-demo", "theorem5", "landau", "divergence", "fermat"}) {
    INFO(std::string(name));
    CHECK(run({"witness", name}).code == 0);
  }
  r = run({"witness", "theorem5", "--q", "3", "--p", "5,7,13"});
  CHECK(contains(r.out, "797162/531441"));
  CHECK(run({"witness", "theorem5", "--function", "phi"}).code == 2);
  CHECK(run({"witness", "mersenne", "--p", "67"}).code == 1);

  r = run({"witness", "nosuch"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "theorem8"));
  CHECK(contains(r.err, "repunit-demo"));

  const auto path = temp_path("landau.csv");
  CHECK(run({"witness", "landau", "--k-max", "12", "--out", path.string()}).code == 0);
  const std::string csv = slurp(path);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 11);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  Run r = run({"verify", "chain", "--limit", "100000"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "violations: 0"));
  CHECK_FALSE(contains(r.out, "wall_time"));
  r = run({"verify", "sigmastar-counterexample", "--limit", "100"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n=2 m=4: 3/2 > 5/4"));
  r = run({"verify", "sigmastar-counterexample", "3"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "inconclusive"));
  CHECK(run({"verify", "chain", "--limit", "0"}).code == 2);
  CHECK(run({"verify", "monotonicity", "--limit", "3000"}).code == 0);
  CHECK(run({"verify", "monotonicity", "--limit", "3000", "--relation", "phi_over_n_down"}).code == 0);
  CHECK(run({"verify", "monotonicity", "--relation", "bogus"}).code == 2);
  CHECK(run({"verify", "sieve-parity", "--limit", "3000"}).code == 0);
  CHECK(run({"verify", "unitary-parity", "--limit", "500", "--timing"}).out.find("wall_time_s") !=
        std::string::npos);
  CHECK(run({"verify", "nosuch"}).code == 2);

  const auto path = temp_path("violations.csv");
  CHECK(run({"verify", "sigmastar-counterexample", "--out", path.string()}).code == 0);
  CHECK(slurp(path).rfind("n,m,detail\n2,4,", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "scan"));
}

TEST_CASE("worker count from the environment leaves output unchanged") {
  ::setenv("ARITHCOMP_WORKERS", "1", 1);
  const Run one = run({"scan", "psi(phi(n))/(n*loglog(n))", "3", "20000"});
  ::setenv("ARITHCOMP_WORKERS", "6", 1);
  const Run six = run({"scan", "psi(phi(n))/(n*loglog(n))", "3", "20000"});
  ::unsetenv("ARITHCOMP_WORKERS");
  CHECK(one.out == six.out);
  CHECK(one.err == six.err);
  CHECK(contains(one.err, "(6/pi^2) e^gamma"));
}

TEST_CASE("known limits") {
  const Constants c = reference_constants();
  auto limit = [](const char* text) { return cli::known_limit(parse_ratio(text)); };
  CHECK(limit("sigma(n)/(n*loglog(n))")->value == c.e_gamma);
  CHECK(limit("sigma(phistar(n))/(n*loglog(n))")->value == c.e_gamma);
  CHECK(limit("sigma(phi(n))/(phi(n)*loglog(phi(n)))")->value == c.e_gamma);
  CHECK(limit("psi(phi(n))/(n*loglog(n))")->value == c.six_over_pi2_e_gamma);
  CHECK(limit("sigma(phi(n))/(phi(phi(n))*loglog(n)^2)")->value == c.e_2gamma);
  CHECK(limit("psi(n)/(phi(n)*loglog(n)^2)")->value == c.six_over_pi2_e_2gamma);
  CHECK(limit("phi(sigma(n))*loglog(n)/n")->value == c.e_neg_gamma);
  CHECK(limit("phi(sigma(n))*loglog(n)/n")->kind == "liminf");
  CHECK(limit("sigma(sigma(n))/n")->value == 1.0);
  CHECK(limit("phi(phi(n))/n")->value == 0.5);
  CHECK(limit("phistar(phistar(n))/n")->kind == "limsup");
  CHECK_FALSE(limit("sigma(sigma(n))/(n*loglog(n))").has_value());
  CHECK_FALSE(limit("sigma(psi(n))/(n*loglog(n))").has_value());
  CHECK_FALSE(limit("phistar(phistar(n))/(log(n)*loglog(n))").has_value());
}

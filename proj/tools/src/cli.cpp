#include "arithcomp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arithcomp/errors.hpp"
#include "arithcomp/expression.hpp"
#include "arithcomp/primes.hpp"
#include "arithcomp/ratio.hpp"
#include "arithcomp/report.hpp"
#include "arithcomp/verify.hpp"
#include "arithcomp/witnesses.hpp"

namespace arithcomp::cli {

namespace {

const std::vector<std::string> kWitnessNames = {"linnik",   "mersenne",   "repunit-demo",
                                                "theorem5", "landau",     "theorem8",
                                                "divergence", "fermat"};
const std::vector<std::string> kVerifyNames = {"chain", "monotonicity", "sigmastar-counterexample",
                                               "sieve-parity", "unitary-parity"};

struct Options {
  std::string expression;
  std::string n_text;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string mode = "max";
  std::string out_path;
  std::string format = "csv";
  bool skip_domain_errors = false;
  int figure = 0;
  std::string name;
  std::optional<std::uint64_t> limit;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> modulus;
  std::string residue = "1";
  std::uint64_t p_min = 2;
  std::uint64_t a = 3;
  std::uint64_t q = 3;
  std::string h = "sigma";
  std::size_t k_max = 0;
  std::string relation = "all";
  bool timing = false;
};

char separator(const Options& o) { return o.format == "tsv" ? '\t' : ','; }

// Writes through a buffer so a failed open or write never leaves a partial
// success silently.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << content;
  file.flush();
  if (!file) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

BigInt parse_positive(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw std::invalid_argument("expected a positive integer, got '" + text + "'");
  }
  BigInt n(text);
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  return n;
}

// Primes p <= 64 with (a^p - 1)/(a - 1) below 2^64.
std::vector<std::uint64_t> repunit_primes(std::uint64_t a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(64)) {
    if (repunit(a, p) >> 64 != 0) {
      break;
    }
    out.push_back(p);
  }
  return out;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Composition c = parse_composition(o.expression);
  const BigInt n = parse_positive(o.n_text);
  const Evaluator ev;
  const BigInt value = ev.evaluate(c, n);
  out << value << '\n';
  out << "factorization: " << ev.factor(value).to_string() << '\n';
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const RatioSpec spec = parse_ratio(o.expression);
  const ScanMode mode = o.mode == "min" ? ScanMode::Min : ScanMode::Max;
  const RecordTable table =
      scan_records(spec, o.from, o.to, mode, {.skip_domain_errors = o.skip_domain_errors});

  std::ostringstream csv;
  write_records_csv(csv, table, separator(o));
  std::ostream* summary = &out;
  if (o.out_path.empty()) {
    out << csv.str();
    summary = &err;
  } else {
    write_file(o.out_path, csv.str());
  }
  for (const auto& s : table.skipped) {
    err << "warning: skipped n=" << s.n << ": " << s.reason << '\n';
  }

  *summary << "spec: " << to_string(spec) << '\n';
  *summary << "range: [" << table.from << ", " << table.to << "] " << o.mode << '\n';
  *summary << "records: " << table.entries.size() << '\n';
  if (table.entries.empty()) {
    *summary << "champion: none\n";
    return kExitOk;
  }
  const RecordEntry& best = table.entries.back();
  *summary << "champion: n=" << best.n << " ratio=" << format_float(best.ratio) << " ("
           << best.numerator << "/" << best.denominator << ")\n";
  if (const auto limit = known_limit(spec)) {
    *summary << "reference: " << limit->kind << " = " << limit->constant_name << " = "
             << format_float(limit->value) << '\n';
    *summary << "gap: " << format_float(best.ratio - limit->value) << '\n';
  }
  return kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  std::ostringstream csv;
  write_figure(o.figure, csv, separator(o));
  if (o.out_path.empty()) {
    out << csv.str();
  } else {
    write_file(o.out_path, csv.str());
    out << "figure " << o.figure << " written to " << o.out_path << '\n';
  }
  return kExitOk;
}

WitnessReport build_witness(const Options& o) {
  if (o.name == "linnik") {
    if (!o.modulus) {
      throw std::invalid_argument("witness linnik needs --mod");
    }
    Residue r;
    if (o.residue == "1" || o.residue == "+1") {
      r = Residue::PlusOne;
    } else if (o.residue == "-1") {
      r = Residue::MinusOne;
    } else {
      throw std::invalid_argument("--residue must be 1 or -1");
    }
    return to_report(linnik_witness(*o.modulus, r, o.p_min));
  }
  if (o.name == "mersenne") {
    std::vector<std::uint64_t> ps = o.primes;
    if (ps.empty()) {
      ps = primes_up_to(kDefaultMersenneMax);
    }
    std::vector<MersenneWitness> ws;
    for (auto p : ps) {
      ws.push_back(mersenne_witness(p));
    }
    return to_report(ws);
  }
  if (o.name == "repunit-demo") {
    const auto ps = o.primes.empty() ? repunit_primes(o.a) : o.primes;
    return to_report(repunit_demo(o.a, ps));
  }
  if (o.name == "theorem5") {
    const auto fid = function_from_name(o.h);
    if (!fid) {
      throw std::invalid_argument("unknown function '" + o.h + "' for --function");
    }
    const auto ps = o.primes.empty() ? repunit_primes(o.q) : o.primes;
    return to_report(theorem5_demo(o.q, *fid, ps));
  }
  if (o.name == "landau") {
    return to_report(landau_primorial_sequence(o.k_max == 0 ? 15 : o.k_max));
  }
  if (o.name == "divergence") {
    return to_report(divergence_demos(o.k_max == 0 ? 12 : o.k_max));
  }
  if (o.name == "theorem8") {
    return to_report(theorem8_exact());
  }
  return to_report(fermat_exhibit());
}

int cmd_witness(const Options& o, std::ostream& out) {
  const WitnessReport report = build_witness(o);
  write_report_text(out, report);
  if (!o.out_path.empty()) {
    std::ostringstream csv;
    write_report_csv(csv, report, separator(o));
    write_file(o.out_path, csv.str());
  }
  return report.holds() ? kExitOk : kExitRuntime;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<PropertyReport> reports;
  if (o.name == "chain") {
    reports.push_back(verify_chain(o.limit.value_or(1'000'000)));
  } else if (o.name == "monotonicity") {
    std::vector<DivisorRelation> relations;
    if (o.relation == "all") {
      relations.assign(kAllRelations.begin(), kAllRelations.end());
    } else if (const auto r = relation_from_name(o.relation)) {
      relations.push_back(*r);
    } else {
      throw std::invalid_argument("unknown relation '" + o.relation + "'");
    }
    for (auto r : relations) {
      reports.push_back(verify_divisor_monotonicity(o.limit.value_or(20000), r));
    }
  } else if (o.name == "sigmastar-counterexample") {
    reports.push_back(find_sigma_star_counterexample(o.limit.value_or(100)));
  } else if (o.name == "sieve-parity") {
    reports.push_back(verify_sieve_vs_direct(o.limit.value_or(100000)));
  } else {
    reports.push_back(verify_unitary_parity(o.limit.value_or(10000)));
  }

  bool ok = true;
  PropertyReport merged;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) {
      out << '\n';
    }
    write_property_text(out, reports[i], o.timing);
    ok = ok && reports[i].success();
    for (const auto& v : reports[i].violations) {
      merged.violations.push_back(v);
      if (reports.size() > 1) {
        merged.violations.back().detail = reports[i].property + ": " + v.detail;
      }
    }
  }
  if (!o.out_path.empty()) {
    std::ostringstream csv;
    write_violations_csv(csv, merged, separator(o));
    write_file(o.out_path, csv.str());
  }
  return ok ? kExitOk : kExitRuntime;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "Write CSV output to this file");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extremal orders of compositions of arithmetical functions", "arithcomp"};
  app.require_subcommand(1, 1);

  auto* eval = app.add_subcommand("eval", "Evaluate a composition exactly at n");
  eval->add_option("expression", o.expression, "e.g. sigma(phistar(n))")->required();
  eval->add_option("n", o.n_text, "Positive integer (any size)")->required();

  auto* scan = app.add_subcommand("scan", "Record (champion) scan of a normalized ratio");
  scan->add_option("expression", o.expression, "e.g. sigma(n)/(n*loglog(n))")->required();
  scan->add_option("from,--from", o.from, "First n")->required();
  scan->add_option("to,--to", o.to, "Last n")->required();
  scan->add_option("mode,--mode", o.mode, "max or min")->check(CLI::IsMember({"max", "min"}));
  scan->add_flag("--skip-domain-errors", o.skip_domain_errors,
                 "Skip n where a log factor is undefined instead of failing");
  add_output_flags(scan, o);

  auto* figure = app.add_subcommand("figure", "Plot data for figure 1, 2 or 3");
  figure->add_option("id", o.figure, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  add_output_flags(figure, o);

  auto* witness = app.add_subcommand("witness", "Run a witness construction");
  witness->add_option("name", o.name)->required()->check(CLI::IsMember(kWitnessNames));
  witness->add_option("--p", o.primes, "Prime exponent(s)")->delimiter(',');
  witness->add_option("--mod", o.modulus, "Modulus for linnik");
  witness->add_option("--residue", o.residue, "1 or -1 (linnik)");
  witness->add_option("--p-min", o.p_min, "Smallest prime considered (linnik)");
  witness->add_option("--a", o.a, "Base of the repunits (repunit-demo)");
  witness->add_option("--q", o.q, "Prime q (theorem5)");
  witness->add_option("--function", o.h, "sigma, psi, sigmastar or sigmae (theorem5)");
  witness->add_option("--k-max", o.k_max, "Largest k (landau, divergence)");
  add_output_flags(witness, o);

  auto* verify = app.add_subcommand("verify", "Check a property over a range");
  verify->add_option("name", o.name)->required()->check(CLI::IsMember(kVerifyNames));
  verify->add_option("limit,--limit", o.limit, "Upper end of the range");
  verify->add_option("--relation", o.relation, "Relation for monotonicity (default all)");
  verify->add_flag("--timing", o.timing, "Print wall time");
  add_output_flags(verify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(o, out);
    }
    if (scan->parsed()) {
      return cmd_scan(o, out, err);
    }
    if (figure->parsed()) {
      return cmd_figure(o, out);
    }
    if (witness->parsed()) {
      return cmd_witness(o, out);
    }
    return cmd_verify(o, out);
  } catch (const arithcomp::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace arithcomp::cli

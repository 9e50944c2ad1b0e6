#include "arithcomp/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "arithcomp/ratio.hpp"

namespace arithcomp {

namespace {

std::string residue_text(Residue residue) { return residue == Residue::PlusOne ? "+1" : "-1"; }

std::string csv_field(const std::string& text, char separator) {
  if (text.find(separator) == std::string::npos && text.find('"') == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + "\"";
}

}  // namespace

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const BigInt& v) const { return v.str(); }
    std::string operator()(const ExactRational& v) const { return v.to_string(); }
    std::string operator()(double v) const { return format_float(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

bool WitnessReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void write_report_text(std::ostream& out, const WitnessReport& report) {
  out << "== " << report.construction << " ==\n";
  for (const auto& [key, value] : report.parameters) {
    out << "  " << key << " = " << value << '\n';
  }
  if (report.target) {
    out << "  target " << report.target_name << " = " << format_float(*report.target) << '\n';
  }
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    out << "-- row " << (r + 1) << '\n';
    for (std::size_t c = 0; c < report.columns.size() && c < report.rows[r].size(); ++c) {
      out << "  " << report.columns[c] << ": " << format_cell(report.rows[r][c]) << '\n';
    }
  }
  for (const auto& note : report.notes) {
    out << "  note: " << note << '\n';
  }
  for (const auto& check : report.checks) {
    out << "  [" << (check.passed ? "PASS" : "FAIL") << "] " << check.description << '\n';
  }
}

void write_report_csv(std::ostream& out, const WitnessReport& report, char separator) {
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? std::string(1, separator) : "") << csv_field(report.columns[c], separator);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? std::string(1, separator) : "") << csv_field(format_cell(row[c]), separator);
    }
    out << '\n';
  }
}

WitnessReport to_report(const LinnikWitness& w) {
  WitnessReport report;
  report.construction = "linnik least prime";
  report.parameters = {{"modulus", std::to_string(w.modulus)},
                       {"residue", residue_text(w.residue)},
                       {"p_min", std::to_string(w.p_min)},
                       {"search_bound", std::to_string(w.search_bound)}};
  const bool plus = w.residue == Residue::PlusOne;
  report.columns = {"prime", "steps", "log_p_over_log_k",
                    plus ? "sigma_k_over_k" : "phi_k_over_k",
                    plus ? "sigma_pm1_over_pm1" : "phi_pp1_over_pp1"};
  report.rows.push_back({BigInt(w.prime), BigInt(w.steps), w.exponent, w.modulus_ratio,
                         w.shifted_ratio});
  report.checks.push_back({plus ? "k | p-1 implies sigma(p-1)/(p-1) >= sigma(k)/k"
                                : "k | p+1 implies phi(p+1)/(p+1) <= phi(k)/k",
                           w.monotone_holds});
  return report;
}

WitnessReport to_report(const std::vector<MersenneWitness>& witnesses) {
  WitnessReport report;
  report.construction = "mersenne (n = 2^p)";
  std::string ps;
  for (const auto& w : witnesses) {
    ps += (ps.empty() ? "" : " ") + std::to_string(w.p);
  }
  report.parameters = {{"p", ps}};
  report.target_name = "1";
  report.target = 1.0;
  report.columns = {"p",
                    "phistar_2p",
                    "factorization",
                    "phistar_2p_prime",
                    "phi_phistar_2p",
                    "phistar_phistar_2p",
                    "gpf",
                    "phi_ratio",
                    "phi_ratio_value",
                    "phistar_ratio_value",
                    "log_statistic",
                    "gpf_over_p_log_p"};
  double min_es = 0.0;
  for (const auto& w : witnesses) {
    report.rows.push_back({BigInt(w.p), w.mersenne, w.mersenne_factors.to_string(),
                           w.mersenne_factors.size() == 1 && w.mersenne_factors.pairs()[0].exponent == 1,
                           w.phi_mersenne, w.phistar_mersenne, w.gpf, w.phi_ratio,
                           w.phi_ratio.to_double(), w.phistar_ratio.to_double(),
                           w.log_statistic, w.gpf_over_p_log_p});
    report.checks.push_back({"p=" + std::to_string(w.p) +
                                 ": phistar(phistar(2^p)) >= P(2^p-1) - 1",
                             w.gpf_bound_holds});
    min_es = min_es == 0.0 ? w.gpf_over_p_log_p : std::min(min_es, w.gpf_over_p_log_p);
  }
  if (!witnesses.empty()) {
    report.notes.push_back("empirical min P(2^p-1)/(p log p) = " + format_float(min_es));
    report.checks.push_back({"P(2^p-1)/(p log p) > 0", min_es > 0.0});
  }
  return report;
}

WitnessReport to_report(const RepunitDemo& demo) {
  WitnessReport report;
  report.construction = "repunit N(a,p) = (a^p-1)/(a-1)";
  report.parameters = {{"a", std::to_string(demo.a)}};
  report.target_name = "F(N)/N limit";
  report.target = 1.0;
  report.columns = {"p",         "N",          "factorization", "sigma_a_pm1_equals_N",
                    "phi_ratio", "phistar_ratio", "sigmastar_ratio", "sigma_ratio"};
  for (const auto& row : demo.rows) {
    report.rows.push_back({BigInt(row.p), row.value, row.factors.to_string(),
                           row.equals_sigma_of_power, row.function_ratios[0],
                           row.function_ratios[1], row.function_ratios[2],
                           row.function_ratios[3]});
  }
  return report;
}

WitnessReport to_report(const Theorem5Demo& demo) {
  WitnessReport report;
  report.construction = "h(sigma(q^(p-1)))/q^(p-1)";
  report.parameters = {{"q", std::to_string(demo.q)},
                       {"h", std::string(function_name(demo.h))}};
  report.target_name = "q/(q-1) = " + demo.target.to_string();
  report.target = demo.target.to_double();
  report.columns = {"p", "N_q_p", "factorization", "h_N", "q_pow", "ratio", "ratio_value", "gap"};
  for (const auto& row : demo.rows) {
    report.rows.push_back({BigInt(row.p), row.repunit, row.repunit_factors.to_string(),
                           row.h_value, row.q_power, row.ratio, row.ratio_value, row.gap});
  }
  // The gap is not monotone in p (it depends on how N(q,p) factors); what
  // always holds is h(N) >= N and that every prime factor r of N(q,p) is p
  // itself or r = 1 (mod p), so the factors grow with p.
  for (const auto& row : demo.rows) {
    bool factors_ok = true;
    for (const auto& [r, e] : row.repunit_factors) {
      factors_ok = factors_ok && (r == row.p || r % row.p == 1);
    }
    report.checks.push_back({"p=" + std::to_string(row.p) + ": h(N) >= N, prime factors of N are p or 1 mod p",
                             row.h_value >= row.repunit && factors_ok});
  }
  return report;
}

WitnessReport to_report(const std::vector<LandauRow>& rows) {
  WitnessReport report;
  report.construction = "landau primorial sequence phi(n_k) loglog(n_k) / n_k";
  report.parameters = {{"k_max", rows.empty() ? "0" : std::to_string(rows.back().k)}};
  report.target_name = "e^-gamma";
  report.target = reference_constants().e_neg_gamma;
  report.columns = {"k", "n_k", "phi_over_n", "value", "gap"};
  for (const auto& row : rows) {
    report.rows.push_back(
        {BigInt(row.k), row.primorial, row.phi_over_n, row.value, row.gap});
  }
  return report;
}

WitnessReport to_report(const std::vector<DivergenceRow>& rows) {
  WitnessReport report;
  report.construction = "primorial divergence and vanishing bounds";
  report.parameters = {{"k_max", rows.empty() ? "0" : std::to_string(rows.back().k)}};
  report.columns = {"k",
                    "n_k",
                    "sigma_over_n",
                    "sigmastar_sigma_over_n",
                    "sigmastar_sigma_over_n_value",
                    "phi_product",
                    "phistar_phi_over_n",
                    "phi_product_value"};
  for (const auto& row : rows) {
    report.rows.push_back({BigInt(row.k), row.primorial, row.sigma_ratio,
                           row.sigmastar_sigma_ratio, row.sigmastar_sigma_ratio.to_double(),
                           row.phi_product, row.phistar_phi_ratio,
                           row.phi_product.to_double()});
    report.checks.push_back({"k=" + std::to_string(row.k) +
                                 ": sigmastar(sigma(n_k))/n_k >= sigma(n_k)/n_k",
                             row.lower_bound_holds});
    report.checks.push_back({"k=" + std::to_string(row.k) +
                                 ": phistar(phi(n_k))/n_k < prod(1-1/p)",
                             row.upper_bound_holds});
  }
  return report;
}

WitnessReport to_report(const Theorem8Witness& w) {
  WitnessReport report;
  report.construction = "fermat product m = 4(2^32-1) = 4 F0 F1 F2 F3 F4";
  report.columns = {"m",
                    "m_half",
                    "factorization",
                    "phistar_m_half",
                    "sigmastar_phistar_m_half",
                    "ratio",
                    "quarter_plus_epsilon",
                    "epsilon",
                    "epsilon_value"};
  report.rows.push_back({w.m, w.half, w.half_factors.to_string(), w.phistar_half,
                         w.sigmastar_value, w.ratio, w.quarter_plus_epsilon, w.epsilon,
                         w.epsilon_value});
  report.target_name = "1/4";
  report.target = 0.25;
  report.checks = {
      {"m/2 = 2*3*5*17*257*65537", w.factorization_matches},
      {"phistar(m/2) = 2^31", w.phistar_is_power},
      {"sigmastar(phistar(m/2))/(m/2) = (2^31+1)/(2(2^32-1)) = 1/4 + 3/(4(2^32-1))",
       w.identity_holds},
  };
  return report;
}

WitnessReport to_report(const std::vector<FermatRow>& rows) {
  WitnessReport report;
  report.construction = "fermat primes n = F: unitary totient compositions";
  report.target_name = "1";
  report.target = 1.0;
  report.columns = {"n", "phistar_phi_over_n", "phistar_phistar_over_n", "phi_phistar_over_n",
                    "phistar_phi_value"};
  for (const auto& row : rows) {
    report.rows.push_back({BigInt(row.fermat), row.phistar_phi_ratio,
                           row.phistar_phistar_ratio, row.phi_phistar_ratio,
                           row.phistar_phi_ratio.to_double()});
  }
  return report;
}

}  // namespace arithcomp

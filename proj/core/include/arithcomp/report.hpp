#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arithcomp/rational.hpp"
#include "arithcomp/witnesses.hpp"

namespace arithcomp {

using Cell = std::variant<std::string, BigInt, ExactRational, double, bool>;

/// Exact values print in full, floats at 12 significant digits.
std::string format_cell(const Cell& cell);

struct Check {
  std::string description;
  bool passed = false;
};

/// Tabular result of a witness construction.
struct WitnessReport {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string target_name;
  std::optional<double> target;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool holds() const;
};

void write_report_text(std::ostream& out, const WitnessReport& report);

/// Header row of column names, then one line per row. Values containing the
/// separator are quoted.
void write_report_csv(std::ostream& out, const WitnessReport& report, char separator = ',');

WitnessReport to_report(const LinnikWitness& witness);
WitnessReport to_report(const std::vector<MersenneWitness>& witnesses);
WitnessReport to_report(const RepunitDemo& demo);
WitnessReport to_report(const Theorem5Demo& demo);
WitnessReport to_report(const std::vector<LandauRow>& rows);
WitnessReport to_report(const std::vector<DivergenceRow>& rows);
WitnessReport to_report(const Theorem8Witness& witness);
WitnessReport to_report(const std::vector<FermatRow>& rows);

}  // namespace arithcomp

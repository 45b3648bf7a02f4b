#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mtc/invariants.hpp"
#include "mtc/liealg.hpp"
#include "mtc/schellekens.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc {

nlohmann::json to_json(const IntMatrix& Z);
nlohmann::json to_json(const EffectiveCenter& center);
nlohmann::json to_json(const SchellekensAlgebra& algebra);
nlohmann::json to_json(const ReducibilityReport& report, bool include_matrix = true);
nlohmann::json to_json(const RelationReport& report);
nlohmann::json to_json(const InvariantMatrix& invariant);
nlohmann::json invariants_report(const ModularDatum& datum, const std::vector<InvariantMatrix>& found,
                                 int max_entry);

/// Header row of quoted alcove labels, then one row of integers per weight.
void write_csv(std::ostream& out, const IntMatrix& Z, const Alcove& alcove);

/// One row of the grid summary.
struct GridRow {
  int N = 2;
  int k = 1;
  std::size_t center_order = 1;
  int support_generator = 0;
  int support_order = 1;
  bool trivial = true;
  std::string witness;  // "(i;j)" in weight labels, or "-"
  std::string case_label;
  std::string verdict;
};

GridRow grid_row(const ReducibilityReport& report, const Alcove& alcove);
std::vector<std::string> grid_header();
std::vector<std::string> grid_fields(const GridRow& row);

}  // namespace mtc

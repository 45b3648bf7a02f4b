#include "mtc/report.hpp"

namespace mtc {

using nlohmann::json;

json to_json(const IntMatrix& Z) {
  json rows = json::array();
  for (std::size_t i = 0; i < Z.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < Z.size(); ++j) row.push_back(Z(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const EffectiveCenter& center) {
  json j;
  j["exponents"] = center.exponents;
  j["order"] = center.size();
  j["generator"] = center.generator ? json(*center.generator) : json(nullptr);
  return j;
}

json to_json(const SchellekensAlgebra& algebra) {
  json j;
  j["N"] = algebra.N;
  j["k"] = algebra.k;
  j["support_generator"] = algebra.support_generator;
  j["support"] = algebra.support();
  j["order"] = algebra.order_H;
  j["xi_base_turns"] = algebra.xi_base.to_string();
  return j;
}

namespace {

json entry_json(const MatrixEntry& e, const Alcove& alcove) {
  json j;
  j["i"] = e.i;
  j["j"] = e.j;
  j["value"] = e.value;
  j["row_weight"] = alcove[e.i].to_string();
  j["column_weight"] = alcove[e.j].to_string();
  return j;
}

json optional_entry(const std::optional<MatrixEntry>& e, const Alcove& alcove) {
  return e ? entry_json(*e, alcove) : json(nullptr);
}

}  // namespace

json to_json(const ReducibilityReport& report, bool include_matrix) {
  const Alcove alcove(report.N, report.k);
  json j;
  j["N"] = report.N;
  j["k"] = report.k;
  j["case"] = report.case_label;
  j["effective_center"] = to_json(report.center);
  j["support"] = {{"generator", report.support_generator}, {"order", report.support_order}};
  j["trivial"] = report.trivial;
  j["witness"] = optional_entry(report.witness, alcove);
  j["case_witness"] = optional_entry(report.proof_witness, alcove);
  if (report.proof_witness)
    j["case_witness"]["Z_value"] = report.Z(report.proof_witness->i, report.proof_witness->j);
  json supports = json::array();
  for (const auto& s : report.supports)
    supports.push_back({{"generator", s.generator}, {"order", s.order}, {"trivial", s.trivial}});
  j["supports"] = std::move(supports);
  j["verdict"] = report.verdict;
  if (include_matrix) {
    json labels = json::array();
    for (const auto& w : alcove.weights()) labels.push_back(w.to_string());
    j["alcove"] = std::move(labels);
    j["Z"] = to_json(report.Z);
  }
  return j;
}

json to_json(const RelationReport& report) {
  json j;
  j["method"] = to_string(report.method);
  j["symmetry"] = report.symmetry;
  j["unitarity"] = report.unitarity;
  j["s2_minus_c"] = report.s2_minus_c;
  j["s4_minus_1"] = report.s4_minus_1;
  j["st3_minus_s2"] = report.st3_minus_s2;
  j["theta_vs_t"] = report.theta_vs_t;
  j["qdim_defect"] = report.qdim_defect;
  j["covariance"] = report.covariance;
  j["max_residual"] = report.max_residual();
  return j;
}

json to_json(const InvariantMatrix& invariant) {
  json j;
  j["Z"] = to_json(invariant.Z);
  j["residual_S"] = invariant.residual_S;
  j["residual_T"] = invariant.residual_T;
  j["trivial"] = invariant.trivial;
  json eig = json::array();
  for (const auto& c : invariant.eigen_decomposition)
    eig.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  j["eigenspaces"] = std::move(eig);
  return j;
}

json invariants_report(const ModularDatum& datum, const std::vector<InvariantMatrix>& found,
                       int max_entry) {
  json j;
  j["schema"] = "mtc.invariants/1";
  j["N"] = datum.N;
  j["k"] = datum.k;
  j["max_entry"] = max_entry;
  json labels = json::array();
  for (const auto& w : datum.alcove.weights()) labels.push_back(w.to_string());
  j["alcove"] = std::move(labels);
  j["count"] = found.size();
  json list = json::array();
  for (const auto& inv : found) list.push_back(to_json(inv));
  j["invariants"] = std::move(list);
  return j;
}

void write_csv(std::ostream& out, const IntMatrix& Z, const Alcove& alcove) {
  for (std::size_t j = 0; j < alcove.size(); ++j) out << (j ? "," : "") << '"' << alcove[j].to_string() << '"';
  out << '\n';
  for (std::size_t i = 0; i < Z.size(); ++i) {
    for (std::size_t j = 0; j < Z.size(); ++j) out << (j ? "," : "") << Z(i, j);
    out << '\n';
  }
}

GridRow grid_row(const ReducibilityReport& report, const Alcove& alcove) {
  GridRow row;
  row.N = report.N;
  row.k = report.k;
  row.center_order = report.center.size();
  row.support_generator = report.support_generator;
  row.support_order = report.support_order;
  row.trivial = report.trivial;
  row.witness = report.witness
                    ? alcove[report.witness->i].to_string() + ";" + alcove[report.witness->j].to_string()
                    : "-";
  row.case_label = report.case_label;
  row.verdict = report.verdict;
  return row;
}

std::vector<std::string> grid_header() {
  return {"N", "k", "center_order", "support", "support_order", "trivial", "witness", "case", "verdict"};
}

std::vector<std::string> grid_fields(const GridRow& row) {
  return {std::to_string(row.N),
          std::to_string(row.k),
          std::to_string(row.center_order),
          "J^" + std::to_string(row.support_generator),
          std::to_string(row.support_order),
          row.trivial ? "yes" : "no",
          row.witness,
          row.case_label,
          row.verdict};
}

}  // namespace mtc

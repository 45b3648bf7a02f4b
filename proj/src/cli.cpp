#include "mtc/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mtc/errors.hpp"
#include "mtc/invariants.hpp"
#include "mtc/modular.hpp"
#include "mtc/modular_json.hpp"
#include "mtc/report.hpp"
#include "mtc/schellekens.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc::cli {

namespace {

using nlohmann::json;

struct CommandInfo {
  Command command;
  const char* name;
  const char* description;
};

constexpr CommandInfo kCommands[] = {
    {Command::modular_data, "modular-data", "S, T, C, twists and quantum dimensions, with relation checks"},
    {Command::effective_center, "effective-center", "simple currents J^p with |J^p| Δ(J^p) integral"},
    {Command::schellekens, "schellekens", "torus partition function of a Schellekens algebra"},
    {Command::invariants, "invariants", "commutant dimension and exhaustive integer modular invariants"},
    {Command::reducibility, "reducibility", "reducibility verdict from a non-trivial Z(A)"},
    {Command::grid, "grid", "reducibility summary over 2 <= N' <= N, 1 <= k' <= k"},
};

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string complex_text(std::complex<double> z) {
  std::ostringstream s;
  s << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

void print_matrix(std::ostream& out, const IntMatrix& Z, const Alcove& alcove) {
  std::size_t width = 0;
  for (const auto& w : alcove.weights()) width = std::max(width, w.to_string().size());
  for (std::size_t i = 0; i < Z.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << alcove[i].to_string() << " |";
    for (std::size_t j = 0; j < Z.size(); ++j) out << ' ' << Z(i, j);
    out << '\n';
  }
}

RelationReport checked_relations(const ModularDatum& datum) {
  RelationReport rep = verify_relations(datum);
  if (!rep.passed())
    throw InternalCheckFailed("modular relations fail for su(" + std::to_string(datum.N) + ") level " +
                              std::to_string(datum.k) + ": max residual " +
                              std::to_string(rep.max_residual()));
  return rep;
}

void run_modular_data(const RunConfig& c, std::ostream& out) {
  const ModularDatum datum = build_modular_datum(c.N, c.k);
  const RelationReport rel = checked_relations(datum);
  switch (c.format) {
    case Format::json: {
      json j = to_json(datum);
      j["relations"] = to_json(rel);
      dump(out, j);
      break;
    }
    case Format::csv:
      out << "index,weight,conformal_weight,theta_turns,qdim,conjugate\n";
      for (std::size_t i = 0; i < datum.size(); ++i)
        out << i << ",\"" << datum.alcove[i].to_string() << "\"," << to_string(datum.conformal_weights[i])
            << ',' << datum.theta[i].to_string() << ',' << std::setprecision(15) << datum.qdim[i] << ','
            << datum.conjugation[i] << '\n';
      break;
    case Format::text:
      out << "su(" << c.N << ") level " << c.k << ": " << datum.size() << " simple objects, c = "
          << to_string(central_charge(c.N, c.k)) << '\n';
      out << "zeta = " << complex_text(datum.zeta) << '\n';
      out << "relations (" << to_string(rel.method) << "): max residual " << std::scientific
          << std::setprecision(3) << rel.max_residual() << std::defaultfloat << '\n';
      for (std::size_t i = 0; i < datum.size(); ++i)
        out << "  " << datum.alcove[i].to_string() << "  Δ = " << to_string(datum.conformal_weights[i])
            << "  θ = exp(2πi·" << datum.theta[i].to_string() << ")  d = " << std::setprecision(12)
            << datum.qdim[i] << '\n';
      break;
  }
}

void run_effective_center(const RunConfig& c, std::ostream& out) {
  const EffectiveCenter center = effective_center(c.N, c.k);
  switch (c.format) {
    case Format::json: {
      json j = to_json(center);
      j["N"] = c.N;
      j["k"] = c.k;
      dump(out, j);
      break;
    }
    case Format::csv:
      out << "p,order,conformal_weight\n";
      for (int p : center.exponents)
        out << p << ',' << order(c.N, p) << ',' << to_string(simple_current_weight_closed_form(c.N, c.k, p))
            << '\n';
      break;
    case Format::text:
      out << "effective center of su(" << c.N << ") level " << c.k << ": order " << center.size() << ", ";
      out << (center.generator ? "generated by J^" + std::to_string(*center.generator) : std::string("trivial"))
          << '\n';
      for (int p : center.exponents)
        out << "  J^" << p << "  order " << order(c.N, p)
            << "  Δ = " << to_string(simple_current_weight_closed_form(c.N, c.k, p)) << '\n';
      break;
  }
}

void run_schellekens(const RunConfig& c, std::ostream& out) {
  const int p = c.support.value_or(case_support(c.N, c.k));
  const SchellekensAlgebra alg = build_algebra(c.N, c.k, p);
  const Alcove alcove(c.N, c.k);
  const IntMatrix Z = torus_partition_function(alg, alcove).Z;
  switch (c.format) {
    case Format::json: {
      json j;
      j["algebra"] = to_json(alg);
      json labels = json::array();
      for (const auto& w : alcove.weights()) labels.push_back(w.to_string());
      j["alcove"] = std::move(labels);
      j["trivial"] = is_trivial(Z);
      j["Z"] = to_json(Z);
      dump(out, j);
      break;
    }
    case Format::csv:
      write_csv(out, Z, alcove);
      break;
    case Format::text:
      out << "Schellekens algebra on <J^" << alg.support_generator << "> (order " << alg.order_H
          << "), su(" << c.N << ") level " << c.k << '\n';
      out << "Z is " << (is_trivial(Z) ? "trivial" : "non-trivial") << '\n';
      print_matrix(out, Z, alcove);
      break;
  }
}

void run_invariants(const RunConfig& c, std::ostream& out) {
  ModularDatum datum;
  if (c.datum_path.empty()) {
    datum = build_modular_datum(c.N, c.k);
  } else {
    std::ifstream in(c.datum_path);
    if (!in) throw InvalidArgument("cannot read " + c.datum_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidArgument(c.datum_path + ": " + e.what());
    }
    datum = modular_datum_from_json(j);
  }
  checked_relations(datum);

  SearchOptions options;
  options.max_entry = c.max_entry;
  options.budget = c.budget;
  options.max_alcove = c.max_alcove;
  if (datum.size() > options.max_alcove)
    throw BudgetExceeded("alcove has " + std::to_string(datum.size()) + " weights, guard is " +
                         std::to_string(options.max_alcove));
  const CommutantReport comm = commutant(datum.S, datum.t_matrix());
  SearchStatistics stats;
  const auto found = enumerate_integer_invariants(datum, options, &stats);

  switch (c.format) {
    case Format::json: {
      json j = invariants_report(datum, found, c.max_entry);
      j["commutant_dimension"] = comm.dimension;
      j["search"] = {{"masked_entries", stats.masked_entries},
                     {"free_coordinates", stats.free_coordinates},
                     {"nodes_visited", stats.nodes_visited}};
      dump(out, j);
      break;
    }
    case Format::csv:
      out << "invariant,weight";
      for (const auto& w : datum.alcove.weights()) out << ",\"" << w.to_string() << '"';
      out << '\n';
      for (std::size_t m = 0; m < found.size(); ++m)
        for (std::size_t i = 0; i < datum.size(); ++i) {
          out << m << ",\"" << datum.alcove[i].to_string() << '"';
          for (std::size_t j = 0; j < datum.size(); ++j) out << ',' << found[m].Z(i, j);
          out << '\n';
        }
      break;
    case Format::text:
      out << "su(" << datum.N << ") level " << datum.k << ": commutant dimension " << comm.dimension << ", "
          << found.size() << " integer invariant(s) with entries <= " << c.max_entry << '\n';
      for (std::size_t m = 0; m < found.size(); ++m) {
        out << "invariant " << m << (found[m].trivial ? " (trivial)" : "") << ", eigenspaces:";
        for (const auto& e : found[m].eigen_decomposition)
          out << ' ' << std::setprecision(6) << e.value << "^" << e.multiplicity;
        out << '\n';
        print_matrix(out, found[m].Z, datum.alcove);
      }
      break;
  }
}

void run_reducibility(const RunConfig& c, std::ostream& out) {
  const ReducibilityReport rep = reducibility_verdict(c.N, c.k, c.support);
  const Alcove alcove(c.N, c.k);
  switch (c.format) {
    case Format::json:
      dump(out, to_json(rep));
      break;
    case Format::csv:
      write_csv(out, rep.Z, alcove);
      break;
    case Format::text: {
      out << "su(" << c.N << ") level " << c.k << ": " << rep.verdict << " [case " << rep.case_label << "]\n";
      out << "support <J^" << rep.support_generator << "> of order " << rep.support_order
          << ", effective center of order " << rep.center.size() << '\n';
      if (rep.witness)
        out << "witness Z[" << alcove[rep.witness->i].to_string() << "][" << alcove[rep.witness->j].to_string()
            << "] = " << rep.witness->value << '\n';
      else
        out << "witness none, Z is proportional to the identity\n";
      std::vector<std::size_t> bar(alcove.size());
      for (std::size_t i = 0; i < alcove.size(); ++i) bar[i] = alcove.index_of(conjugate(c.N, alcove[i]));
      const IntMatrix C = IntMatrix::permutation(bar);
      if (!rep.trivial && rep.Z == C) out << "Z = C (charge conjugation)\n";
      break;
    }
  }
}

void run_grid(const RunConfig& c, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (int N = 2; N <= c.N; ++N)
    for (int k = 1; k <= c.k; ++k) {
      const ReducibilityReport rep = reducibility_verdict(N, k);
      rows.push_back(grid_fields(grid_row(rep, Alcove(N, k))));
    }
  const auto header = grid_header();
  switch (c.format) {
    case Format::json: {
      json j = json::array();
      for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t f = 0; f < header.size(); ++f) o[header[f]] = r[f];
        j.push_back(std::move(o));
      }
      dump(out, j);
      break;
    }
    case Format::csv:
      for (std::size_t f = 0; f < header.size(); ++f) out << (f ? "," : "") << header[f];
      out << '\n';
      for (const auto& r : rows) {
        for (std::size_t f = 0; f < r.size(); ++f) out << (f ? "," : "") << '"' << r[f] << '"';
        out << '\n';
      }
      break;
    case Format::text: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t f = 0; f < header.size(); ++f) width[f] = header[f].size();
      for (const auto& r : rows)
        for (std::size_t f = 0; f < r.size(); ++f) width[f] = std::max(width[f], r[f].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t f = 0; f < r.size(); ++f) {
          out << r[f];
          if (f + 1 < r.size()) out << std::string(width[f] - r[f].size() + 2, ' ');
        }
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      break;
    }
  }
}

void validate(const RunConfig& c) {
  if (c.N < 2) throw InvalidArgument("--N must be at least 2");
  const bool needs_positive_level = c.command == Command::reducibility || c.command == Command::grid;
  if (c.k < (needs_positive_level ? 1 : 0))
    throw InvalidArgument(needs_positive_level ? "--k must be at least 1" : "--k must be non-negative");
  if (c.support && c.command != Command::schellekens && c.command != Command::reducibility)
    throw InvalidArgument("--support is only valid with schellekens and reducibility");
  if (c.max_entry < 1) throw InvalidArgument("--max-entry must be at least 1");
  if (c.budget < 0) throw InvalidArgument("--budget must be non-negative");
}

}  // namespace

std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                               int& exit_code) {
  CLI::App app{"Modular data, Schellekens algebras and reducibility for su(N) at level k", "mtc"};
  app.require_subcommand(1);
  RunConfig config;
  int support = 0;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

  std::vector<std::pair<CLI::App*, Command>> subs;
  std::vector<CLI::Option*> support_opts;
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.description);
    sub->add_option("--N", config.N, "rank parameter of su(N)")->required();
    sub->add_option("--k", config.k, "level")->required();
    sub->add_option("--format", config.format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    sub->add_option("-o,--output", config.output, "write to this file instead of stdout");
    support_opts.push_back(sub->add_option("--support", support, "support generator p of <J^p>"));
    sub->add_option("--max-entry", config.max_entry, "largest entry in the invariant search");
    sub->add_option("--budget", config.budget, "largest number of free search coordinates");
    sub->add_option("--max-alcove", config.max_alcove, "largest alcove the invariant search accepts");
    sub->add_option("--datum", config.datum_path, "modular datum JSON for the invariant search");
    subs.emplace_back(sub, info.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kOk : kInvalidArguments;
    return std::nullopt;
  }
  for (std::size_t s = 0; s < subs.size(); ++s)
    if (subs[s].first->parsed()) {
      config.command = subs[s].second;
      if (support_opts[s]->count() > 0) config.support = support;
    }
  exit_code = kOk;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::ostringstream buffer;
    switch (config.command) {
      case Command::modular_data: run_modular_data(config, buffer); break;
      case Command::effective_center: run_effective_center(config, buffer); break;
      case Command::schellekens: run_schellekens(config, buffer); break;
      case Command::invariants: run_invariants(config, buffer); break;
      case Command::reducibility: run_reducibility(config, buffer); break;
      case Command::grid: run_grid(config, buffer); break;
    }
    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write " + config.output);
      file << buffer.str();
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InternalCheckFailed& e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const SupportNotInEffectiveCenter& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int exit_code = kOk;
  auto config = parse(argc, argv, out, err, exit_code);
  if (!config) return exit_code;
  if (const char* env = std::getenv("MTC_BUDGET")) {
    const std::string text(env);
    int budget = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), budget);
    if (ec != std::errc() || ptr != text.data() + text.size() || budget < 0) {
      err << "error: MTC_BUDGET must be a non-negative integer, got '" << text << "'\n";
      return kInvalidArguments;
    }
    config->budget = budget;
  }
  return run(*config, out, err);
}

}  // namespace mtc::cli

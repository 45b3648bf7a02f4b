#include "mtc/modular_json.hpp"

#include "mtc/errors.hpp"
#include "mtc/simple_currents.hpp"

namespace mtc {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "mtc.modular-datum/1";

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw InvalidArgument(std::string("modular datum: missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

nlohmann::json to_json(const ModularDatum& d) {
  json j;
  j["schema"] = kSchema;
  j["N"] = d.N;
  j["k"] = d.k;
  json labels = json::array();
  for (const auto& w : d.alcove.weights()) labels.push_back(w.labels);
  j["alcove"] = std::move(labels);
  json weights = json::array();
  json theta = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    weights.push_back(to_string(d.conformal_weights[i]));
    theta.push_back(d.theta[i].to_string());
  }
  j["conformal_weights"] = std::move(weights);
  j["theta"] = std::move(theta);
  json S = json::array();
  for (Eigen::Index r = 0; r < d.S.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < d.S.cols(); ++c) row.push_back(complex_pair(d.S(r, c)));
    S.push_back(std::move(row));
  }
  j["S"] = std::move(S);
  json T = json::array();
  for (Eigen::Index r = 0; r < d.t_diagonal.size(); ++r) T.push_back(complex_pair(d.t_diagonal(r)));
  j["T"] = std::move(T);
  j["C"] = d.conjugation;
  j["zeta"] = complex_pair(d.zeta);
  j["qdim"] = d.qdim;
  return j;
}

ModularDatum modular_datum_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.value("schema", "") != kSchema)
      throw InvalidArgument(std::string("modular datum: schema must be '") + kSchema + "'");
    ModularDatum d;
    d.N = field(j, "N").get<int>();
    d.k = field(j, "k").get<int>();
    d.alcove = Alcove(d.N, d.k);
    const std::size_t n = d.size();

    const auto& labels = field(j, "alcove");
    if (labels.size() != n) throw InvalidArgument("modular datum: alcove size mismatch");
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i].get<std::vector<int>>() != d.alcove[i].labels)
        throw InvalidArgument("modular datum: alcove labels out of order at index " + std::to_string(i));

    const auto& weights = field(j, "conformal_weights");
    const auto& theta = field(j, "theta");
    const auto& S = field(j, "S");
    const auto& T = field(j, "T");
    const auto& C = field(j, "C");
    const auto& qdim = field(j, "qdim");
    if (weights.size() != n || theta.size() != n || S.size() != n || T.size() != n || C.size() != n ||
        qdim.size() != n)
      throw InvalidArgument("modular datum: array lengths do not match the alcove");

    d.S.resize(n, n);
    d.t_diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.conformal_weights.push_back(parse_rational(weights[i].get<std::string>()));
      d.theta.emplace_back(parse_rational(theta[i].get<std::string>()));
      if (S[i].size() != n) throw InvalidArgument("modular datum: S is not square");
      for (std::size_t c = 0; c < n; ++c) d.S(i, c) = read_complex(S[i][c]);
      d.t_diagonal(i) = read_complex(T[i]);
      const auto ci = C[i].get<std::size_t>();
      if (ci >= n) throw InvalidArgument("modular datum: C entry out of range");
      d.conjugation.push_back(ci);
      d.qdim.push_back(qdim[i].get<double>());
    }
    d.zeta = read_complex(field(j, "zeta"));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("modular datum: ") + e.what());
  }
}

}  // namespace mtc

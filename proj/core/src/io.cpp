#include "sepstates/io.hpp"

#include <fstream>

namespace sepstates {

Json complex_to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw invalid_input("expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw invalid_input("expected non-empty matrix rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw invalid_input("ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(j[i][c]);
    }
  }
  if (!m.allFinite()) throw invalid_input("non-finite matrix entries");
  return m;
}

Json state_to_json(const PureState& s) {
  Json j;
  j["dims"] = Json::array({s.dim_a, s.dim_b});
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    amps.push_back(complex_to_json(s.amplitudes(i)));
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

PureState state_from_json(const Json& j) {
  if (!j.contains("dims") || !j.contains("amplitudes")) {
    throw invalid_input("state file needs \"dims\" and \"amplitudes\"");
  }
  PureState s;
  s.dim_a = j["dims"][0].get<int>();
  s.dim_b = j["dims"][1].get<int>();
  const auto& amps = j["amplitudes"];
  s.amplitudes.resize(static_cast<Eigen::Index>(amps.size()));
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    s.amplitudes(i) = complex_from_json(amps[i]);
  }
  s.validate();
  return s;
}

Json operation_to_json(const ProductKrausSet& op) {
  Json j;
  Json pairs = Json::array();
  for (const auto& [a, b] : op.pairs) {
    Json p;
    p["a"] = matrix_to_json(a);
    p["b"] = matrix_to_json(b);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

ProductKrausSet operation_from_json(const Json& j) {
  if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty()) {
    throw invalid_input("operation file needs a non-empty \"pairs\" array");
  }
  ProductKrausSet op;
  for (const auto& p : j["pairs"]) {
    op.pairs.push_back({matrix_from_json(p.at("a")), matrix_from_json(p.at("b"))});
  }
  return with_closure(std::move(op));
}

Json ensemble_to_json(const Ensemble& e) {
  Json j;
  Json outs = Json::array();
  for (const auto& [p, state] : e.outcomes) {
    Json o;
    o["p"] = p;
    o["state"] = state_to_json(state);
    outs.push_back(std::move(o));
  }
  j["outcomes"] = std::move(outs);
  j["pruned_mass"] = e.pruned_mass;
  return j;
}

Ensemble ensemble_from_json(const Json& j) {
  if (!j.contains("outcomes")) {
    throw invalid_input("ensemble file needs \"outcomes\"");
  }
  Ensemble e;
  for (const auto& o : j["outcomes"]) {
    e.outcomes.emplace_back(o.at("p").get<double>(), state_from_json(o.at("state")));
  }
  e.pruned_mass = j.value("pruned_mass", 0.0);
  e.validate();
  return e;
}

Json majorization_report_to_json(const MajorizationReport& rep) {
  Json j;
  Json rows = Json::array();
  for (const auto& e : rep.n_values) {
    Json r;
    r["n"] = e.n;
    r["lhs"] = e.lhs;
    r["rhs"] = e.rhs;
    r["slack"] = e.slack;
    rows.push_back(std::move(r));
  }
  j["per_n"] = std::move(rows);
  j["min_slack"] = rep.min_slack;
  j["worst_n"] = rep.worst_n;
  j["feasible"] = rep.verdict;
  j["tolerance"] = rep.tolerance;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sepstates

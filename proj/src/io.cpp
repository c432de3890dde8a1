#include "sparsectl/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace sparsectl {

using nlohmann::json;

namespace {

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(field + ": expected a non-empty array of row arrays");
  }
  const size_t rows = j.size();
  size_t cols = 0;
  Matrix out;
  for (size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument(field + ": row " + std::to_string(r) +
                                  " is not a non-empty array");
    }
    if (r == 0) {
      cols = row.size();
      out.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      throw std::invalid_argument(field + ": row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        throw std::invalid_argument(field + ": entry (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") is not a number");
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c].get<double>();
    }
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json vectors_to_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }
std::string passfail(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

LinearSystem system_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("system document must be a JSON object");
  for (const char* field : {"A", "B", "C"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("system document is missing \"") + field + "\"");
    }
  }
  LinearSystem sys;
  sys.A = matrix_from_json(j.at("A"), "A");
  sys.B = matrix_from_json(j.at("B"), "B");
  sys.C = matrix_from_json(j.at("C"), "C");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw std::invalid_argument("name: expected a string");
    sys.name = j.at("name").get<std::string>();
  }
  const auto errors = validate(sys);
  if (!errors.empty()) {
    std::ostringstream os;
    os << "invalid system";
    for (const auto& e : errors) os << "; " << e;
    throw std::invalid_argument(os.str());
  }
  return sys;
}

json system_to_json(const LinearSystem& sys) {
  json j;
  j["A"] = matrix_to_json(sys.A);
  j["B"] = matrix_to_json(sys.B);
  j["C"] = matrix_to_json(sys.C);
  if (!sys.name.empty()) j["name"] = sys.name;
  return j;
}

LinearSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read system file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return system_from_json(j);
}

json report_to_json(const ControllabilityReport& r) {
  json j;
  j["name"] = r.name;
  j["N"] = r.N;
  j["m"] = r.m;
  j["n"] = r.n;
  j["rank_CW"] = r.rank_CW;
  j["output_controllable"] = r.output_controllable;
  j["rank_profile"] = {{"ranks", r.profile.ranks}, {"metric", r.profile.metric}};
  j["necessary_bound"] = {{"numerator", r.necessary_bound.num},
                          {"denominator", r.necessary_bound.den},
                          {"value", r.necessary_bound.value()}};
  j["necessary_bound_index"] = r.necessary_bound_index;
  j["sufficient_bound"] = r.sufficient_bound;
  j["max_metric"] = r.max_metric;
  j["s_list"] = r.s_list;
  j["necessary_holds"] = r.necessary_holds;
  j["sufficient_holds"] = r.sufficient_holds;
  j["corollary2_holds"] = r.corollary2_holds;
  j["pbh_state_sparse"] = r.pbh_state_sparse;
  j["theoremC_necessary"] = r.theoremC_necessary;
  j["min_sparsity_lo"] = r.min_sparsity ? json(r.min_sparsity->lo) : json(nullptr);
  j["min_sparsity_hi"] = r.min_sparsity ? json(r.min_sparsity->hi) : json(nullptr);
  j["corollary1_applies"] = r.corollary1_applies;
  j["corollary1_reduced_bound"] = r.corollary1_reduced_bound;
  j["corollary2_bound"] = r.corollary2_bound;
  j["corollary2_strict_bound"] = r.corollary2_strict_bound;
  j["tolerance_used"] = {{"relative_rank_tol", r.tolerance_used.relative_rank_tol},
                         {"residual_tol", r.tolerance_used.residual_tol}};
  j["notes"] = r.notes;
  return j;
}

ControllabilityReport report_from_json(const json& j) {
  ControllabilityReport r;
  r.name = j.at("name").get<std::string>();
  r.N = j.at("N").get<int>();
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.rank_CW = j.at("rank_CW").get<int>();
  r.output_controllable = j.at("output_controllable").get<bool>();
  r.profile.ranks = j.at("rank_profile").at("ranks").get<std::vector<int>>();
  r.profile.metric = j.at("rank_profile").at("metric").get<std::vector<int>>();
  r.necessary_bound.num = j.at("necessary_bound").at("numerator").get<long long>();
  r.necessary_bound.den = j.at("necessary_bound").at("denominator").get<long long>();
  r.necessary_bound_index = j.at("necessary_bound_index").get<int>();
  r.sufficient_bound = j.at("sufficient_bound").get<int>();
  r.max_metric = j.at("max_metric").get<int>();
  r.s_list = j.at("s_list").get<std::vector<int>>();
  r.necessary_holds = j.at("necessary_holds").get<std::vector<bool>>();
  r.sufficient_holds = j.at("sufficient_holds").get<std::vector<bool>>();
  r.corollary2_holds = j.at("corollary2_holds").get<std::vector<bool>>();
  r.pbh_state_sparse = j.at("pbh_state_sparse").get<std::vector<bool>>();
  r.theoremC_necessary = j.at("theoremC_necessary").get<std::vector<bool>>();
  if (!j.at("min_sparsity_lo").is_null()) {
    r.min_sparsity = SparsityInterval{j.at("min_sparsity_lo").get<int>(),
                                      j.at("min_sparsity_hi").get<int>()};
  }
  r.corollary1_applies = j.at("corollary1_applies").get<bool>();
  r.corollary1_reduced_bound = j.at("corollary1_reduced_bound").get<int>();
  r.corollary2_bound = j.at("corollary2_bound").get<int>();
  r.corollary2_strict_bound = j.at("corollary2_strict_bound").get<int>();
  r.tolerance_used.relative_rank_tol =
      j.at("tolerance_used").at("relative_rank_tol").get<double>();
  r.tolerance_used.residual_tol = j.at("tolerance_used").at("residual_tol").get<double>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string report_to_text(const ControllabilityReport& r) {
  std::ostringstream os;
  os << "System";
  if (!r.name.empty()) os << " '" << r.name << "'";
  os << ": N = " << r.N << " states, m = " << r.m << " inputs, n = " << r.n << " outputs\n";

  os << "  rank(C W)            : " << r.rank_CW << " of n = " << r.n
     << "  ->  output controllable: " << yesno(r.output_controllable) << "\n";
  os << "  rank(C A^i W), i=0.." << r.N << " :";
  for (int v : r.profile.ranks) os << " " << v;
  os << "\n";
  os << "  rank gaps            :";
  for (int v : r.profile.metric) os << " " << v;
  os << "\n";
  os << "  necessary bound      : " << r.necessary_bound.num << "/" << r.necessary_bound.den
     << " = " << r.necessary_bound.value() << "  (window i = " << r.necessary_bound_index
     << ")\n";
  os << "  sufficient bound     : " << r.sufficient_bound << " = min{m = " << r.m
     << ", max gap = " << r.max_metric << "}\n";
  os << "  corollary 1          : " << (r.corollary1_applies ? "applies" : "does not apply")
     << " (reduced bound s >= " << r.corollary1_reduced_bound << ")\n";
  os << "  corollary 2 bounds   : s >= " << r.corollary2_bound
     << "  (strict variant s >= " << r.corollary2_strict_bound << ")\n";
  if (r.min_sparsity) {
    os << "  minimum sparsity s*  : in [" << r.min_sparsity->lo << ", " << r.min_sparsity->hi
       << "]\n";
  } else {
    os << "  minimum sparsity s*  : undefined (not output controllable)\n";
  }

  os << "  per-sparsity verdicts:\n";
  os << "    " << std::left << std::setw(6) << "s" << std::setw(11) << "necessary"
     << std::setw(12) << "sufficient" << std::setw(12) << "corollary2" << std::setw(17)
     << "pbh_state_sparse" << "theoremC_necessary\n";
  for (size_t i = 0; i < r.s_list.size(); ++i) {
    os << "    " << std::left << std::setw(6) << r.s_list[i] << std::setw(11)
       << passfail(r.necessary_holds[i]) << std::setw(12) << passfail(r.sufficient_holds[i])
       << std::setw(12) << passfail(r.corollary2_holds[i]) << std::setw(17)
       << passfail(r.pbh_state_sparse[i]) << passfail(r.theoremC_necessary[i]) << "\n";
  }

  os << "  tolerances           : rank tol " << r.tolerance_used.relative_rank_tol
     << ", residual tol " << r.tolerance_used.residual_tol << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

json verdict_to_json(const OracleVerdict& v) {
  json j;
  j["status"] =
      v.status == OracleStatus::Controllable ? "controllable" : "not_within_horizon";
  j["horizon_found"] = v.horizon_found ? json(*v.horizon_found) : json(nullptr);
  j["witness_supports"] = v.witness_supports ? json(*v.witness_supports) : json(nullptr);
  j["explored_horizon"] = v.explored_horizon;
  j["states_explored"] = v.states_explored;
  return j;
}

std::string verdict_to_text(const OracleVerdict& v) {
  std::ostringstream os;
  if (v.status == OracleStatus::Controllable) {
    os << "verdict: controllable (witness horizon K = " << *v.horizon_found << ")\n";
    os << "witness supports (1-based actuators per step):\n";
    for (size_t k = 0; k < v.witness_supports->size(); ++k) {
      os << "  step " << (k + 1) << ": {";
      const auto& step = (*v.witness_supports)[k];
      for (size_t i = 0; i < step.size(); ++i) os << (i ? ", " : "") << step[i];
      os << "}\n";
    }
  } else {
    os << "verdict: no witness within horizon K <= " << v.explored_horizon
       << " (not provably uncontrollable)\n";
  }
  os << "explored horizon: " << v.explored_horizon
     << ", deduplicated subspace states: " << v.states_explored << "\n";
  return os.str();
}

json solution_to_json(const DesignSolution& s) {
  json j;
  json inputs = json::array();
  for (const auto& u : s.inputs.inputs) inputs.push_back(vector_to_json(u));
  j["inputs"] = inputs;
  j["supports"] = s.supports;
  j["residual"] = s.residual;
  j["target_reached"] = s.target_reached;
  if (s.warning) j["warning"] = *s.warning;
  return j;
}

std::string solution_to_text(const DesignSolution& s) {
  std::ostringstream os;
  os << "designed inputs (" << s.inputs.horizon() << " steps, sparsity budget "
     << s.inputs.sparsity << "):\n";
  for (size_t k = 0; k < s.inputs.inputs.size(); ++k) {
    os << "  u_" << (k + 1) << " = [";
    const auto& u = s.inputs.inputs[k];
    for (Eigen::Index i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u(i);
    os << "]  support {";
    const auto& step = s.supports[k];
    for (size_t i = 0; i < step.size(); ++i) os << (i ? ", " : "") << step[i];
    os << "}\n";
  }
  os << "residual ||y_K - y_f|| = " << s.residual << "  target reached: "
     << yesno(s.target_reached) << "\n";
  if (s.warning) os << "warning: " << *s.warning << "\n";
  return os.str();
}

json trajectory_to_json(const Trajectory& t) {
  json j;
  j["states"] = vectors_to_json(t.states);
  j["outputs"] = vectors_to_json(t.outputs);
  return j;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw std::invalid_argument("vector entries must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Vector parse_vector_arg(const std::string& literal_or_path) {
  const auto first = literal_or_path.find_first_not_of(" \t");
  if (first != std::string::npos && literal_or_path[first] == '[') {
    return vector_from_json(json::parse(literal_or_path));
  }
  std::ifstream in(literal_or_path);
  if (!in) throw std::invalid_argument("cannot read vector file: " + literal_or_path);
  json j;
  in >> j;
  return vector_from_json(j);
}

SparseInputSequence inputs_from_json(const json& j) {
  const json* rows = nullptr;
  if (j.is_array()) {
    rows = &j;
  } else if (j.is_object() && j.contains("inputs")) {
    rows = &j.at("inputs");
  } else {
    throw std::invalid_argument("inputs document must be an array or contain \"inputs\"");
  }
  SparseInputSequence seq;
  for (const auto& row : *rows) seq.inputs.push_back(vector_from_json(row));
  seq.sparsity = sparsity_of(seq);
  return seq;
}

}  // namespace sparsectl

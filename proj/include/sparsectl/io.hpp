#pragma once

#include "sparsectl/criteria.hpp"
#include "sparsectl/design.hpp"
#include "sparsectl/oracle.hpp"

#include <json.hpp>

#include <string>

namespace sparsectl {

/// System file format: {"A": [[...]], "B": [[...]], "C": [[...]],
/// "name": optional string}, row arrays of finite numbers. Dimension
/// inconsistencies are load errors.
LinearSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const LinearSystem& sys);
LinearSystem load_system(const std::string& path);

nlohmann::json report_to_json(const ControllabilityReport& r);
ControllabilityReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const ControllabilityReport& r);

nlohmann::json verdict_to_json(const OracleVerdict& v);
std::string verdict_to_text(const OracleVerdict& v);

nlohmann::json solution_to_json(const DesignSolution& s);
std::string solution_to_text(const DesignSolution& s);

nlohmann::json trajectory_to_json(const Trajectory& t);

Vector vector_from_json(const nlohmann::json& j);

/// Accepts an inline JSON array literal ("[1, 0, 2]") or a path to a file
/// containing one.
Vector parse_vector_arg(const std::string& literal_or_path);

/// Accepts a bare array of row arrays, {"inputs": [[...]]}, or a full design
/// solution document.
SparseInputSequence inputs_from_json(const nlohmann::json& j);

}  // namespace sparsectl

#pragma once

#include <json.hpp>

#include "sepstates/majorization.hpp"

namespace sepstates {

using Json = nlohmann::ordered_json;

// Complex values serialize as [re, im] pairs; matrices as nested row arrays.
Json complex_to_json(const std::complex<double>& z);
std::complex<double> complex_from_json(const Json& j);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

// StateFile: {"dims": [D_A, D_B], "amplitudes": [[re, im], ...]}
Json state_to_json(const PureState& s);
PureState state_from_json(const Json& j);

// OperationFile: {"pairs": [{"a": [[[re,im],...],...], "b": ...}, ...]}
Json operation_to_json(const ProductKrausSet& op);
ProductKrausSet operation_from_json(const Json& j);

// {"outcomes": [{"p": ..., "state": {...}}], "pruned_mass": ...}
Json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j);

Json majorization_report_to_json(const MajorizationReport& rep);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace sepstates

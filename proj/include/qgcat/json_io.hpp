#pragma once

#include <json.hpp>

#include "qgcat/cyclo.hpp"
#include "qgcat/cyclo_matrix.hpp"
#include "qgcat/sixj.hpp"

namespace qgcat {

/// {"order": N, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const nlohmann::json& j);

/// Row-major nested arrays of CycloNumber objects.
nlohmann::json to_json(const CycloMatrix& m);

/// {"level": k, "F": [{"labels": [a,b,c,d,e,f], "value": ...}], "R": [{"labels": [a,b,c], "value": ...}]}
nlohmann::json table_to_json(const SixJTable& t, const std::vector<CycloNumber>& vals);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace qgcat

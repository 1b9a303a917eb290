#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "su2net/evolution.hpp"
#include "su2net/states.hpp"

namespace su2net::io {

/// Matrix wire format: { "n": N, "re": [[...]], "im": [[...]] }, row-major.
/// Doubles round-trip exactly.
nlohmann::json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const nlohmann::json& j);

nlohmann::json couplingMatrixToJson(const CouplingMatrix& m);
CouplingMatrix couplingMatrixFromJson(const nlohmann::json& j);

/// Same matrix format plus a "t" field.
nlohmann::json evolutionMatrixToJson(const EvolutionMatrix& u);
EvolutionMatrix evolutionMatrixFromJson(const nlohmann::json& j);

/// State wire format: list of [occupation vector, re, im] triples in
/// lexicographic occupation order.
nlohmann::json stateToJson(const MultiModeFockState& s);
MultiModeFockState stateFromJson(const nlohmann::json& j);

std::string formatDouble(double v);  // %.17g

}  // namespace su2net::io

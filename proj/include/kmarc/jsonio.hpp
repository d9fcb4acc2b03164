#pragma once

// JSON serialization for arcs and collineation witnesses.  Coordinates
// travel as hex strings; reading an arc re-runs the verifier and
// cross-checks the declared metadata.

#include <json.hpp>

#include "kmarc/arcs.hpp"
#include "kmarc/symmetry.hpp"

namespace kmarc {

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json field_to_json(const Field& F);
Field field_from_json(const nlohmann::json& j);

// {"field": {...}, "t": int, "nucleus": [hex x3] | null,
//  "points": [[hex x3], ...], "t_secants": [[hex x3], ...]}
nlohmann::json arc_to_json(const KMArc& A);
KMArc arc_from_json(const nlohmann::json& j);

// {"matrix": [[hex x3] x3], "frob": int}
nlohmann::json witness_to_json(const Collineation& g);
Collineation witness_from_json(const nlohmann::json& j);

}  // namespace kmarc

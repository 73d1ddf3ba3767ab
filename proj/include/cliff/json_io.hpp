#pragma once

#include <json.hpp>

#include "cliff/embeddings.hpp"
#include "cliff/groups.hpp"
#include "cliff/multivector.hpp"
#include "cliff/spinors.hpp"

namespace cliff::jsonio {

// Canonical form: sorted list of {"blade": [indices], "num": "...", "den": "..."}
// with the blade order fixed by (grade, ascending index tuple).
nlohmann::json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const nlohmann::json& j, const Signature& sig);

// Row-major rational strings.
nlohmann::json matrix_to_json(const RatMatrix& m);
nlohmann::json ortho_to_json(const groups::OrthoMatrix& m);

nlohmann::json certificate_to_json(const groups::GroupCertificate& cert);

// k x k array of {"re": "...", "im": "..."}.
nlohmann::json kmatrix_to_json(const spinors::KMatrix& m);

}  // namespace cliff::jsonio

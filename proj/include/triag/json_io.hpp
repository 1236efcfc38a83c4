#pragma once

#include <json.hpp>

#include "triag/catalog.hpp"

namespace triag {

using Json = nlohmann::ordered_json;

// Algebra wire format:
//   { "M": int, "f": int, "basis": [labels],
//     "brackets": [{"i": label, "j": label, "terms": [{"k": label, "c": "p/q"}]}],
//     "char_matrices": [{"free_diagonal": [...], "off_diagonal": [{"row","col","c"}]}],
//     "sigma": [["p/q", ...], ...] }
// Key order is fixed; char_matrices/sigma appear only for solvable members
// built from a characteristic spec.
Json algebra_to_json(const LieAlgebra& alg);

// Rebuilds and re-validates; when char_matrices are present the brackets in
// the file are checked against the ones those matrices generate.
LieAlgebra algebra_from_json(const Json& j, const std::string& name = "algebra");

Json certificate_to_json(const Certificate& cert);
std::string certificate_text(const Certificate& cert);

Json catalog_entry_to_json(const CatalogEntry& entry);

} // namespace triag

#pragma once

#include <nlohmann/json.hpp>

#include "realcmp/finite_category.hpp"
#include "realcmp/simplicial_object.hpp"

namespace realcmp {

/// {"cap", "semi", "counts", "faces"[n][i][cell], "degeneracies"[n][j][cell], "labels"?}.
/// faces[0] is empty; degeneracies is absent for semi-simplicial sets.
nlohmann::json to_json(const SimplicialSet& x);
/// {"objects", "morphisms": [{"source", "target", "label"?}], "identities",
///  "composition": [[g, f, g o f], ...], "object_labels"?}.
nlohmann::json to_json(const FiniteCategory& c);
/// {"cap", "internal_cap", "semi", "levels", "faces"[n][i] = map, "degeneracies"?}, a map
/// being its component arrays per internal degree.
nlohmann::json to_json(const SimplicialObject& x);

/// Throws SchemaError with a JSON pointer to the offending node, or ValidationError
/// when well-formed data violate the simplicial identities.
SimplicialSet simplicial_set_from_json(const nlohmann::json& j);
FiniteCategory finite_category_from_json(const nlohmann::json& j);

}  // namespace realcmp

#pragma once

#include <string>
#include <vector>

#include "realcmp/simplicial_object.hpp"

namespace realcmp {

/// point, simplex0 .. simplex3, s2, circle, nerve1, nerve_or, nerve_iso.
const std::vector<std::string>& builtin_names();
/// Throws ConfigError for an unknown name.
SimplicialSet builtin_set(const std::string& name, int cap);
/// The built-in set as a simplicial object with discrete levels.
SimplicialObject builtin_object(const std::string& name, int cap);

/// The boundary of the 2-simplex collapsed to a point.
SimplicialSet sphere2(int cap);
/// The 1-simplex with its two vertices identified.
SimplicialSet circle(int cap);

}  // namespace realcmp

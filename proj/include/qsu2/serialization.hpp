#pragma once

#include "qsu2/coordinate_algebra.hpp"
#include "qsu2/enveloping_algebra.hpp"

#include <string>

namespace qsu2 {

inline constexpr int kSchemaVersion = 1;

// Canonical JSON term list: terms in map order, coefficients as coefficient
// arrays of decimal strings (ascending v-degree).  Canonical form of the
// scalars makes the output unique per value.
std::string to_json(const AlgebraElement& x);
std::string to_json(const UElement& x);

AlgebraElement algebra_element_from_json(const std::string& text);
UElement u_element_from_json(const std::string& text);

}  // namespace qsu2

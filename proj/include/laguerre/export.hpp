#pragma once

#include <string>

#include "json.hpp"
#include "laguerre/plane.hpp"

namespace laguerre {

/// {"q", "points", "circles", "generators"}, lexicographic order.
nlohmann::json plane_to_json(const Plane& plane);

/// Parses "canonical", "p:x,y[@K:a,b,c]" or "ideal:a[@K:a,b,c]". Without K
/// the pencil circle is (0, 0, y) for an affine point and (a, 0, 0) for an
/// ideal one. Throws Error{invalid_argument}, Error{out_of_range} for a
/// coordinate outside the field, or Error{not_incident}.
Pencil parse_pencil(const Plane& plane, const std::string& text);

}  // namespace laguerre

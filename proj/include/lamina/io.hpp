#pragma once

#include <json.hpp>

#include <string>

#include "lamina/coords.hpp"
#include "lamina/surface.hpp"
#include "lamina/types.hpp"

namespace lamina {

/// File formats. Triangulations:
///   {"genus": g, "boundary": r, "triangles": [[e,e,e], ...]}
/// with each edge id appearing exactly twice. Coordinates:
///   {"x": [...], "xp": [...]}
/// Integer entries may be JSON numbers or decimal strings (for values beyond
/// 64 bits). Rational vectors are arrays of "p/q" strings.

nlohmann::json triangulation_to_json(const IdealTriangulation& tri);
IdealTriangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json tcoord_to_json(const TCoord& c);
TCoord tcoord_from_json(const nlohmann::json& j);

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

nlohmann::json vecq_to_json(const VecQ& v);
VecQ vecq_from_json(const nlohmann::json& j);

/// Parses a file; throws invalid_argument with a parse-error message.
nlohmann::json load_json_file(const std::string& path);

}  // namespace lamina

#pragma once

#include <json.hpp>

#include "khcube/bigraded.hpp"
#include "khcube/cube.hpp"
#include "khcube/invariants.hpp"
#include "khcube/khcomplex.hpp"
#include "khcube/triangle.hpp"

namespace khcube::cli {

using Json = nlohmann::json;

/// Small values as JSON numbers, anything wider than 64 bits as a decimal string.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json homology_to_json(const BigradedHomology& h);
Json z4_to_json(const Z4Table& t);
Json invariants_to_json(const InvariantReport& r);
Json cone_to_json(const ConeReport& r);
Json verdict_to_json(const OsLemmaVerdict& v);
Json complex_to_json(const BigradedComplex& c);
Json cube_to_json(const CubeDescriptor& cube);

/// Schema: {"ring": "Q", "complexes": [C0, C1, C2], "f": [..3], "j": [..3]}
/// with each complex {"degrees": [...], "d": [[row, col, value], ...]} and each
/// map either null or a list of [row, col, value]. f[i] : C_i -> C_{i-1} and
/// j[i] : C_i -> C_{i-2}, indices mod 3. Throws ValidationError on malformed input.
TriangleData triangle_from_json(const Json& j);
Json triangle_to_json(const TriangleData& t);

/// Two-space indentation, sorted keys, trailing newline.
std::string render(const Json& j);

}  // namespace khcube::cli

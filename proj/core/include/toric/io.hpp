#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/cone.hpp"
#include "toric/numeric.hpp"
#include "toric/resolution.hpp"
#include "toric/rlct.hpp"

namespace toric::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json to_json(const Integer& v);
Json to_json(const LatticeVector& v);
Json to_json(const IntegerMatrix& m);
Integer integer_from_json(const Json& j);
LatticeVector vector_from_json(const Json& j);
IntegerMatrix matrix_from_json(const Json& j);
/// Rationals are always strings "p/q"; integers are accepted too.
Rational rational_from_json(const Json& j);

/// {"variables": [...], "polynomial": "..."}; extra keys are ignored. An
/// explicit `variable_order` overrides the file's list.
LaurentPolynomial polynomial_from_json(const Json& j,
                                       const std::optional<std::vector<std::string>>& variable_order = {});
Json polynomial_to_json(const LaurentPolynomial& f);

/// {"ambient_dim": n, "generators": [[...], ...]}
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);
/// {"cones": [<cone>, ...]}; ambient_dim may also sit at the top level.
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

/// A flat step array (one chart) or {"charts": [[...], ...]}.
std::vector<std::vector<ResolutionStep>> script_from_json(const Json& j);
Json script_to_json(const std::vector<std::vector<ResolutionStep>>& charts);
Json step_to_json(const ResolutionStep& step);

Json trace_to_json(const ResolutionTrace& trace);
Json report_to_json(const RlctReport& report, bool bound_d_over_2);
/// Reads back lambda1 and m1 (charts are optional).
RlctReport report_from_json(const Json& j);

/// {"box": [["0","1"], ...], "points_per_axis": 256, "refine": 1.5,
///  "n": [100, ...], "digits": 30}; optional "method", "seed", "samples".
QuadratureSpec quadrature_from_json(const Json& j);
Json quadrature_to_json(const QuadratureSpec& spec);

}  // namespace toric::io

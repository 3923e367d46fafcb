#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "leibhom/leibniz.hpp"

namespace leibhom {

/// Reads the algebra JSON format:
///
///   {"name": "A2", "dimension": 2, "basis": ["x", "y"],
///    "brackets": [{"left": "x", "right": "x", "value": {"y": "1"}}],
///    "weights": [1, 2]}
///
/// Coefficients are rational strings ("-3/2"); unlisted brackets are zero;
/// "weights" is optional; unknown keys are rejected. Errors are InputError
/// with the offending field path in the message.
LeibnizAlgebra algebra_from_json(const nlohmann::json &doc);
LeibnizAlgebra algebra_from_string(std::string_view text);
LeibnizAlgebra algebra_from_file(const std::string &path);

nlohmann::json algebra_to_json(const LeibnizAlgebra &a);

} // namespace leibhom

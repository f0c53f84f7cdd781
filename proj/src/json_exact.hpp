#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nnequiv/rational.hpp"

namespace nnequiv::detail {

/// Parses JSON text, replacing every non-integer number by a string holding
/// its literal source text. Integers keep their exact 64-bit value.
/// Throws ParseError on malformed input.
nlohmann::json parse_json_exact(std::string_view text);

/// Accepts a JSON string (decimal or "p/q") or integer. `what` names the
/// field for error messages.
Rational json_to_rational(const nlohmann::json& value, const std::string& what);

/// Exact decimal string when possible, "p/q" otherwise.
std::string rational_to_json_text(const Rational& r);

}  // namespace nnequiv::detail

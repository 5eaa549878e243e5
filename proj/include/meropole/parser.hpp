#pragma once

#include "meropole/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace meropole {

/// Parses a polynomial expression over the declared variables.
///
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := base ('^' nonneg-integer)?
///   base    := identifier | integer ('/' positive-integer)? | '(' expr ')'
///
/// Whitespace is ignored. Implicit multiplication ("2x") is rejected.
/// Throws ParseError (with byte offset) or InputError for unknown identifiers.
MultiPoly parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Splits "x, z ,t" into names and validates each as an identifier.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace meropole

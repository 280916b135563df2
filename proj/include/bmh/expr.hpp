#pragma once

#include "bmh/ratfunc.hpp"

#include <map>
#include <string>
#include <string_view>

namespace bmh {

using ExprAliases = std::map<std::string, RatFunc, std::less<>>;

/// Parses an arithmetic expression over Q into a RatFunc.
///
/// Grammar: integers, variable names from the Var table (X01 .. X34, q, r, ...),
/// names from `aliases`, parentheses, unary minus, + - * / and ^ with a
/// non-negative integer exponent. Throws std::invalid_argument with the
/// offending position on malformed input.
RatFunc parse_expression(std::string_view text, const ExprAliases& aliases = {});

/// Aliases used throughout the parameter tables: qm = q*r.
const ExprAliases& scheme_aliases();

}  // namespace bmh

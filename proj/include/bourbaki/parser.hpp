#pragma once

#include <string_view>

#include "bourbaki/polynomial.hpp"

namespace bourbaki {

/// Parses
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | variable ['^' nat] | '(' expr ')' ['^' nat]
/// over the variables of `ring`. Whitespace is ignored; multiplication must be
/// explicit. Throws ParseError carrying a 0-based character offset.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace bourbaki

#pragma once

#include <string>
#include <vector>

#include "adw/numerics/multipoly.hpp"

namespace adw {

// Parses a polynomial expression over the declared variables.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | atom ('^' uint)?
//   atom   := number | 'i' | identifier | '(' expr ')'
//   number := digits ['.' digits] [('e'|'E') ['+'|'-'] digits] ['i']
//
// There is no implicit multiplication. Unknown identifiers and syntax
// errors raise ConfigError with a character position.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace adw

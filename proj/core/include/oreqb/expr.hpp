#pragma once

// Element and coefficient-list literals.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')' | '(' expr ',' expr ')' | matrix
//   matrix := '[' '[' row ']' (',' '[' row ']')* ']' | '[' row (';' row)* ']'
//   row    := expr (',' expr)*
//
// Integers denote multiples of the unity. Identifiers are the adjoined
// variable of a quotient ring (at any nesting depth) or an element name of a
// table ring. Matrix entries and tuple components are parsed in the
// underlying base rings. A coefficient list is '[' expr (',' expr)* ']'.

#include <string>
#include <string_view>
#include <vector>

#include "oreqb/ring.hpp"

namespace oreqb {

/// Throws ParseError with a 1-based line/column.
Elem parse_element(const FiniteRing& ring, std::string_view text);

/// Parses "[c0, c1, ...]" (low-to-high); "[]" is the empty list.
std::vector<Elem> parse_coefficient_list(const FiniteRing& ring, std::string_view text);

/// "[c0,c1,...]" using element display names.
std::string format_coefficient_list(const FiniteRing& ring, const std::vector<Elem>& coeffs);

}  // namespace oreqb

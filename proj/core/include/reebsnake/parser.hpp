#pragma once

#include <string_view>

#include "reebsnake/polynomial.hpp"

namespace reebsnake {

/// Parses text such as "x^10 + y^6/6 - 3*x*y^4/4 + x^2*y^2".
///
/// Grammar (whitespace insignificant):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      ('/' only by a nonzero constant)
///   unary   := ('+' | '-') unary | power
///   power   := atom ('^' integer)?
///   atom    := integer | 'x' | 'y' | '(' expr ')'
/// so "p/q" literals are constant quotients. Throws ParseError with the offset.
BivariatePolynomial parse_polynomial(std::string_view text);

}  // namespace reebsnake

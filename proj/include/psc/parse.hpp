#pragma once

#include <string>
#include <string_view>

#include "psc/polynomial.hpp"

namespace psc {

// Grammar (whitespace-insensitive, '*' mandatory between factors):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' ['-'] integer]
//   primary := integer ['/' integer] | variable | '(' expr ')'
// A negative exponent is permitted only directly on an invertible
// variable. Throws ParseError with a 1-based character position.
Polynomial parse_polynomial(std::string_view text, const SignaturePtr& sig);

// Emits terms in canonical order, leading term first; parse of the
// result reproduces the polynomial exactly.
std::string render_polynomial(const Polynomial& f);

std::string render_monomial(const Monomial& m, const Signature& sig);

}  // namespace psc

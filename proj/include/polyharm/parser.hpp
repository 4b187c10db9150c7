// Text form of polynomials.
//
// Grammar (whitespace allowed between tokens):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+'|'-')* atom ('^' nat)?
//   atom   := number | var | '(' expr ')'
//   number := nat ('/' posnat)?      -- '/' appears only inside literals
//   var    := 'x' posnat             -- 1-based, bounded by the dimension
//
// The printer emits terms in descending graded-lex order ("x1^2*x2 - 1/4");
// its output always re-parses to the same polynomial.

#pragma once

#include <string>

#include "polyharm/mpoly.hpp"

namespace polyharm {

// Parses `text` as a polynomial in x1..x<dim>.  Throws ParseError with a
// byte position on any malformed input, unknown variable, or x0.
MPoly parse_poly(const std::string& text, int dim);

// Canonical text form; "0" for the zero polynomial.
std::string to_string(const MPoly& p);

}  // namespace polyharm

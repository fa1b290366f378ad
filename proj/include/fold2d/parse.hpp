#ifndef FOLD2D_PARSE_HPP
#define FOLD2D_PARSE_HPP

#include "fold2d/expr.hpp"

#include <string_view>

namespace fold2d {

// Parses the expression grammar
//
//   expr    := term {("+"|"-") term}
//   term    := factor {("*"|"/") factor}
//   factor  := "-" factor | primary ["^" factor]
//   primary := NUMBER | IDENT | FUNC "(" expr ")" | "(" expr ")"
//
// with FUNC in {sin, cos, exp, ln, sqrt}, "^" right-associative, and unary
// minus binding looser than "^" (so -x^2 parses as -(x^2)). Numeric literals
// become exact rational constants. "-" immediately followed by a literal is
// folded into a negative constant so printed trees re-parse identically.
//
// Every identifier must be declared in `symbols` (as a variable or a
// parameter) or be a function name. Throws ParseError with a 0-based offset.
Expr parse_expr(std::string_view text, const SymbolSet& symbols);

} // namespace fold2d

#endif

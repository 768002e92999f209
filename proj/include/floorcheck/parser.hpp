#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "floorcheck/expr.hpp"

namespace floorcheck {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error("at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};

// Statement grammar:
//   statement := expr REL expr "on" domain      REL := ">=" | "<=" | ">" | "<"
//   expr      := term (("+"|"-") term)*
//   term      := unary (("*"|"/") unary)*
//   unary     := "-"? factor
//   factor    := atom ("^" INT)?
//   atom      := NUMBER | IDENT | IDENT "(" expr ("," expr)* ")" | "(" expr ")"
//   functions:   floor frac sqrt cbrt root4 abs exp sin cos min max
//   domain    := constraint ("," constraint)*
//   constraint:= IDENT (">"|">=") NUMBER | IDENT "in" "R" | IDENT "notin" "Z"
//   NUMBER    := INT | INT "/" INT | decimal literal
//
// Decimal literals are converted to exact rationals.  The builder collapses
// Div(Const,Const) and Neg(Const) so the literal "4/15" and the printed form
// of Const(4/15) produce identical trees.
Statement parse_statement(std::string_view text);

// Expression-only entry point (used by tests and the corpus loader).
Expr parse_expression(std::string_view text);

} // namespace floorcheck

#pragma once

#include <string>

#include "floorcheck/expr.hpp"

namespace floorcheck {

// Canonical text form.  Law: parse(print(parse(s))) is node-for-node equal
// to parse(s).  Rational constants print as exact fractions, never decimals.
std::string print_expr(const Expr& e);
std::string print_statement(const Statement& st);
std::string print_domain(const Domain& d);

} // namespace floorcheck

#pragma once

#include <string>

#include "lassobmc/ast.hpp"

namespace lbmc {

// Fully parenthesized rendering in the surface syntax. Embedded (first-order)
// formulas print with `State`, `next`, `infinite`, ... so they are readable
// in reports, though the parser does not accept those forms back.
std::string to_string(const Expr& e);
std::string to_string(const Formula& f);

/// Source text that parses back to the same AST (modulo positions).
std::string print_spec(const Spec& spec);

const char* mult_name(Mult m);

}  // namespace lbmc

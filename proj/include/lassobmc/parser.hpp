#pragma once

#include <string>
#include <string_view>

#include "lassobmc/ast.hpp"

namespace lbmc {

/// Parse specification source into an unresolved Spec. Names are left as
/// ExprKind::Name nodes; see resolve().
///
/// Binary temporal operators must be parenthesized: `(a U b)`.
/// Quantifier bodies extend as far right as possible.
Spec parse_spec(std::string_view text);

/// Parse a single formula (used by tests and the CLI's inline targets).
FormulaPtr parse_formula(std::string_view text);

}  // namespace lbmc

#pragma once

#include "lassobmc/ast.hpp"

namespace lbmc {

/// Negation normal form. Negations end up directly above atoms; `implies`
/// is eliminated. Negated X becomes the weak next `Xw`, so the rewrite is
/// exact under the finite-prefix semantics too.
FormulaPtr nnf(const FormulaPtr& f);

/// True when `f` satisfies the NNF shape invariant.
bool is_nnf(const Formula& f);

}  // namespace lbmc

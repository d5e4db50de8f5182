#pragma once

#include "lassobmc/ast.hpp"

namespace lbmc {

/// Name resolution and arity checking.
///
/// Every Name becomes a SigRef, FieldRef or VarRef with its arity; predicate
/// calls are inlined into facts, assertions, `trans` and other predicates.
/// Primes are only accepted in `trans` (and predicates it reaches); `trans`
/// must be free of temporal operators. Idempotent on its own output.
///
/// Throws ResolveError.
Spec resolve(const Spec& spec);

/// Resolve a stand-alone closed formula against an already resolved spec,
/// inlining calls. Primes are rejected.
FormulaPtr resolve_formula(const Spec& resolved, const FormulaPtr& f);

/// The formula a command is about: the assertion body for `check`; for `run`
/// the predicate body with its parameters existentially bound, or an
/// assertion body.
FormulaPtr command_target(const Spec& resolved, const Command& cmd);

}  // namespace lbmc

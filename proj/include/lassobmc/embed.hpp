#pragma once

#include <set>
#include <string>

#include "lassobmc/ast.hpp"

namespace lbmc {

/// Where the implicit State column of a mutable field lives.
enum class Idiom {
  Local,   // last column, accessed as x.s
  Global,  // first column, accessed as s.x
};

struct EmbedOptions {
  Idiom idiom = Idiom::Local;
  /// Total-order traces: G drops its `infinite` guard (the naive
  /// quantification over s.*next), and no back loop exists.
  bool finite_traces = false;
};

/// Translates temporal formulas into first-order relational formulas over
/// the trace relations (State, first, next, infinite, ...).
///
///   X f      some s.next and [f](s.next)
///   Xw f     no s.next or [f](s.next)
///   G f      infinite and all s1 : s.*next | [f](s1)
///   F f      some s1 : s.*next | [f](s1)
///   f U g    some s1 : s.*next | [g](s1) and all s2 : s.*next & ^next.s1 | [f](s2)
///   f R g    [G g](s) or some s1 : s.*next | [f](s1) and all s2 : s.*next & *next.s1 | [g](s2)
///
/// Mutable field x at state s becomes x.s (local) or s.x (global).
class Embedder {
 public:
  Embedder(const Spec& resolved, EmbedOptions options);

  /// Requires `f` in NNF with calls inlined.
  FormulaPtr embed(const FormulaPtr& f, const ExprPtr& state);

  /// embed(nnf(f), first): facts and run targets.
  FormulaPtr translate_positive(const FormulaPtr& f);
  /// not embed(nnf(not f), first): assertions.
  FormulaPtr translate_check(const FormulaPtr& f);
  /// embed(nnf(not f), first): what the solver searches for on a check.
  FormulaPtr counterexample_query(const FormulaPtr& f);
  /// all s : State, s' : s.next | [t] with primes read at s'.
  FormulaPtr desugar_trans(const FormulaPtr& t);

  [[nodiscard]] const EmbedOptions& options() const { return options_; }

 private:
  FormulaPtr embed_at(const FormulaPtr& f, const ExprPtr& state, const ExprPtr& primed_state);
  ExprPtr embed_expr(const ExprPtr& e, const ExprPtr& state, const ExprPtr& primed_state);
  ExprPtr at_state(const std::string& field, int arity, const ExprPtr& state) const;
  FormulaPtr globally(const FormulaPtr& f, const ExprPtr& state);
  std::string fresh();

  EmbedOptions options_;
  std::set<std::string> used_;
  int counter_ = 0;
};

}  // namespace lbmc

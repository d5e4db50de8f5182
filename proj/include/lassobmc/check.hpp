#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lassobmc/ast.hpp"
#include "lassobmc/embed.hpp"
#include "lassobmc/ground.hpp"
#include "lassobmc/oracle.hpp"
#include "lassobmc/sat.hpp"
#include "lassobmc/trace.hpp"
#include "lassobmc/universe.hpp"

namespace lbmc {

struct CheckOptions {
  int max_scope = 0;  // 0: the command's State bound, else kDefaultScope
  Scopes scopes;      // override the command's signature scopes
  Idiom idiom = Idiom::Local;
  bool finite_traces = false;
  std::string external_solver;  // empty: internal CDCL
  SolverConfig solver;
  std::string dimacs_dir;  // when set, every CNF is written there
  /// Called with every CNF and its verdict (internal or external).
  std::function<void(int k, const Cnf&, SatStatus)> on_cnf;
};

/// Everything solved at one State scope.
struct ScopeProblem {
  Universe u;
  TraceAxioms trace;
  FormulaPtr query;  // facts, trans and the command formula, first-order
  Cnf cnf;
  VarMap vars;
};

/// The command's signature scopes with the options' overrides applied.
Scopes command_scopes(const Command& cmd, const CheckOptions& opts);

ScopeProblem build_problem(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts);

/// Inverts the variable map. Throws InternalError when the loop selector is
/// not one-hot or a tuple mentions an absent atom.
TraceInstance decode_model(const std::vector<bool>& model, const VarMap& vars, const Universe& u,
                           const TraceAxioms& trace, const Spec& resolved);

enum class VerdictKind { Counterexample, Instance, NoCounterexample, NoInstance, ResourceLimit };

struct ScopeLog {
  int k = 0;
  SatStatus result = SatStatus::Unknown;
  int vars = 0;
  int primary_vars = 0;
  std::size_t clauses = 0;
  double ground_ms = 0;
  double solve_ms = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::NoCounterexample;
  int scope = 0;  // State scope of the trace, or the bound reached
  std::optional<TraceInstance> trace;
  std::vector<ScopeLog> log;
};

/// Iterates k = 1 .. max scope, stopping at the first satisfiable scope.
/// Reported traces are re-validated against the query with eval_fo.
Verdict run_command(const Spec& resolved, const Command& cmd, const CheckOptions& opts = {});

std::string format_verdict_text(const Verdict& v, const Spec& resolved);
std::string format_verdict_json(const Verdict& v, const Spec& resolved);

const char* verdict_name(VerdictKind kind);

}  // namespace lbmc

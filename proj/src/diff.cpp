#include "lassobmc/diff.hpp"

#include "lassobmc/errors.hpp"
#include "lassobmc/nnf.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/resolve.hpp"

namespace lbmc {

bool contains_until_release(const Formula& f) {
  if (f.kind == FormulaKind::U || f.kind == FormulaKind::R) return true;
  for (const auto& s : f.subs)
    if (contains_until_release(*s)) return true;
  return false;
}

bool oracle_satisfiable(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts, std::uint64_t cap) {
  EnumerationOptions eo{EmbedOptions{opts.idiom, opts.finite_traces}, cap};
  Embedder emb(resolved, eo.embed);
  FormulaPtr target = command_target(resolved, cmd);
  FormulaPtr fo = cmd.kind == CommandKind::Check ? emb.counterexample_query(target) : emb.translate_positive(target);
  bool found = false;
  enumerate_traces(resolved, command_scopes(cmd, opts), k, eo, [&](const TraceInstance& t) {
    found = eval_fo(fo, t, opts.idiom);
    return !found;
  });
  return found;
}

SatStatus pipeline_status(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts) {
  ScopeProblem p = build_problem(resolved, cmd, k, opts);
  SolveResult r = opts.external_solver.empty() ? solve(p.cnf, opts.solver) : solve_external(p.cnf, opts.external_solver);
  if (opts.on_cnf) opts.on_cnf(k, p.cnf, r.status);
  if (r.status == SatStatus::Sat) {
    TraceInstance t = decode_model(r.model, p.vars, p.u, p.trace, resolved);
    if (!eval_fo(p.query, t, opts.idiom)) throw InternalError("decoded trace does not satisfy the query");
  }
  return r.status;
}

void fidelity_check(const Spec& resolved, const FormulaPtr& f, const Scopes& scopes, int k,
                    const EnumerationOptions& opts, FidelityStats& out) {
  FormulaPtr n = nnf(f);
  Embedder emb(resolved, opts.embed);
  FormulaPtr fo = emb.embed(n, mk::first());
  bool ur = contains_until_release(*n);
  std::string text = to_string(*f);
  enumerate_traces(resolved, scopes, k, opts, [&](const TraceInstance& t) {
    ++out.compared;
    bool a = eval_fo(fo, t, opts.embed.idiom);
    bool b = eval_ltl_lasso(n, t, 0);
    if (a != b) {
      std::string rec = disagreement_record(text, t, a, b);
      if (ur && t.loop) {
        ++out.lasso_ur_disagreements;
        out.records.push_back(rec);
      } else {
        out.failures.push_back(rec);
      }
    }
    return true;
  });
}

}  // namespace lbmc

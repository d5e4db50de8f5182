#include "lassobmc/check.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "lassobmc/errors.hpp"
#include "lassobmc/resolve.hpp"

namespace lbmc {

namespace {

int max_scope(const Command& cmd, const CheckOptions& opts) {
  if (opts.max_scope > 0) return opts.max_scope;
  if (cmd.max_state_scope > 0) return cmd.max_state_scope;
  return kDefaultScope;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Scopes command_scopes(const Command& cmd, const CheckOptions& opts) {
  Scopes s = cmd.scopes;
  for (const auto& [name, b] : opts.scopes) s[name] = b;
  return s;
}

ScopeProblem build_problem(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts) {
  Universe u = build_universe(resolved, command_scopes(cmd, opts), k);
  check_scopes(resolved, u);
  TraceAxioms trace = axiomatize_trace(k, opts.finite_traces);
  Embedder emb(resolved, EmbedOptions{opts.idiom, opts.finite_traces});
  std::vector<FormulaPtr> parts;
  for (const auto& f : resolved.facts) parts.push_back(emb.translate_positive(f.body));
  if (resolved.trans) parts.push_back(emb.desugar_trans(resolved.trans));
  FormulaPtr target = command_target(resolved, cmd);
  parts.push_back(cmd.kind == CommandKind::Check ? emb.counterexample_query(target) : emb.translate_positive(target));
  FormulaPtr query = mk::conj_all(parts);
  Grounder g(resolved, u, trace, opts.idiom);
  g.assert_formula(query);
  return ScopeProblem{std::move(u), trace, query, g.cnf(), g.vars()};
}

TraceInstance decode_model(const std::vector<bool>& model, const VarMap& vars, const Universe& u,
                           const TraceAxioms& trace, const Spec& resolved) {
  TraceInstance t;
  t.u = u;
  t.k = trace.k;
  t.present.assign(static_cast<std::size_t>(u.size()), true);
  auto rels = relation_decls(resolved);
  for (const auto& r : rels) {
    if (r.mutable_field)
      t.mutables[r.name].assign(static_cast<std::size_t>(trace.k), {});
    else
      t.statics[r.name];
  }
  auto value = [&](int v) { return static_cast<std::size_t>(v) < model.size() && model[static_cast<std::size_t>(v)]; };
  for (std::size_t a = 0; a < vars.presence.size(); ++a)
    if (vars.presence[a] != 0) t.present[a] = value(vars.presence[a]);
  for (std::size_t l = 0; l < vars.loops.size(); ++l) {
    if (!value(vars.loops[l])) continue;
    if (t.loop) throw InternalError("loop selector is not one-hot");
    t.loop = static_cast<int>(l);
  }
  for (int v = 1; v <= vars.num_primary(); ++v) {
    const auto& e = vars.at(v);
    if (e.kind != VarMap::Kind::Fact || !value(v)) continue;
    for (int a : e.tuple)
      if (!t.present[static_cast<std::size_t>(a)]) throw InternalError("decoded tuple mentions an absent atom");
    const auto& rel = rels[static_cast<std::size_t>(e.relation)];
    if (rel.mutable_field)
      t.mutables[rel.name][static_cast<std::size_t>(e.state)].insert(e.tuple);
    else
      t.statics[rel.name].insert(e.tuple);
  }
  return t;
}

Verdict run_command(const Spec& resolved, const Command& cmd, const CheckOptions& opts) {
  Verdict verdict;
  bool check = cmd.kind == CommandKind::Check;
  int bound = max_scope(cmd, opts);
  for (int k = 1; k <= bound; ++k) {
    ScopeLog log;
    log.k = k;
    auto t0 = std::chrono::steady_clock::now();
    ScopeProblem p = build_problem(resolved, cmd, k, opts);
    log.ground_ms = ms_since(t0);
    log.vars = p.cnf.num_vars;
    log.primary_vars = p.vars.num_primary();
    log.clauses = p.cnf.clauses.size();
    if (!opts.dimacs_dir.empty()) {
      std::filesystem::create_directories(opts.dimacs_dir);
      std::string name = cmd.target.empty() ? "inline" : cmd.target;
      std::ofstream out(std::filesystem::path(opts.dimacs_dir) / (name + "_k" + std::to_string(k) + ".cnf"));
      out << export_dimacs(p.cnf);
    }
    auto t1 = std::chrono::steady_clock::now();
    SolveResult r = opts.external_solver.empty() ? solve(p.cnf, opts.solver) : solve_external(p.cnf, opts.external_solver);
    log.solve_ms = ms_since(t1);
    log.result = r.status;
    verdict.log.push_back(log);
    if (opts.on_cnf) opts.on_cnf(k, p.cnf, r.status);
    if (r.status == SatStatus::Unknown) {
      verdict.kind = VerdictKind::ResourceLimit;
      verdict.scope = k;
      return verdict;
    }
    if (r.status == SatStatus::Sat) {
      TraceInstance t = decode_model(r.model, p.vars, p.u, p.trace, resolved);
      if (!eval_fo(p.query, t, opts.idiom)) throw InternalError("decoded trace does not satisfy the query");
      if (!respects_multiplicities(resolved, t)) throw InternalError("decoded trace violates a multiplicity");
      verdict.kind = check ? VerdictKind::Counterexample : VerdictKind::Instance;
      verdict.scope = k;
      verdict.trace = std::move(t);
      return verdict;
    }
  }
  verdict.kind = check ? VerdictKind::NoCounterexample : VerdictKind::NoInstance;
  verdict.scope = bound;
  return verdict;
}

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Counterexample: return "counterexample";
    case VerdictKind::Instance: return "instance";
    case VerdictKind::NoCounterexample: return "no-counterexample";
    case VerdictKind::NoInstance: return "no-instance";
    case VerdictKind::ResourceLimit: return "resource-limit";
  }
  return "?";
}

namespace {

std::vector<std::string> mutable_names(const Spec& s) {
  std::vector<std::string> out;
  for (const auto& r : relation_decls(s))
    if (r.mutable_field) out.push_back(r.name);
  return out;
}

std::vector<std::string> static_names(const Spec& s) {
  std::vector<std::string> out;
  for (const auto& r : relation_decls(s))
    if (!r.mutable_field) out.push_back(r.name);
  return out;
}

std::vector<std::string> present_atoms(const TraceInstance& t, const SigAtoms& s) {
  std::vector<std::string> out;
  for (int a : s.atoms)
    if (t.present[static_cast<std::size_t>(a)]) out.push_back(t.u.atom_names[static_cast<std::size_t>(a)]);
  return out;
}

nlohmann::json tuples_json(const TraceInstance& t, const TupleSet& tuples) {
  auto arr = nlohmann::json::array();
  for (const auto& tup : tuples) {
    auto row = nlohmann::json::array();
    for (int a : tup) row.push_back(t.u.atom_names[static_cast<std::size_t>(a)]);
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

std::string format_verdict_text(const Verdict& v, const Spec& resolved) {
  std::string out = std::string("VERDICT ") + verdict_name(v.kind);
  switch (v.kind) {
    case VerdictKind::NoCounterexample:
    case VerdictKind::NoInstance:
      return out + " up-to State=" + std::to_string(v.scope) + "\n";
    case VerdictKind::ResourceLimit:
      return out + " scope State=" + std::to_string(v.scope) + "\n";
    default:
      break;
  }
  const TraceInstance& t = *v.trace;
  out += " scope State=" + std::to_string(v.scope) + " loop=" + (t.loop ? std::to_string(*t.loop) : "none") + "\n";
  auto muts = mutable_names(resolved);
  for (int s = 0; s < t.k; ++s) {
    out += "state " + std::to_string(s) + ":";
    for (std::size_t i = 0; i < muts.size(); ++i) {
      out += i ? ", " : " ";
      out += muts[i] + " = " + format_tuples(t, t.mutables.at(muts[i])[static_cast<std::size_t>(s)]);
    }
    out += "\n";
  }
  out += "static: ";
  auto stats = static_names(resolved);
  for (std::size_t i = 0; i < stats.size(); ++i) {
    out += i ? ", " : " ";
    out += stats[i] + " = " + format_tuples(t, t.statics.at(stats[i]));
  }
  out += "\nsigs:   ";
  for (std::size_t i = 0; i + 1 < t.u.sigs.size(); ++i) {
    out += i ? ", " : " ";
    out += t.u.sigs[i].sig + " = {";
    auto atoms = present_atoms(t, t.u.sigs[i]);
    for (std::size_t j = 0; j < atoms.size(); ++j) out += (j ? ", " : "") + atoms[j];
    out += "}";
  }
  return out + "\n";
}

std::string format_verdict_json(const Verdict& v, const Spec& resolved) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(v.kind);
  switch (v.kind) {
    case VerdictKind::NoCounterexample:
    case VerdictKind::NoInstance:
      j["up_to"] = {{"State", v.scope}};
      return j.dump(2) + "\n";
    case VerdictKind::ResourceLimit:
      j["scope"] = {{"State", v.scope}};
      return j.dump(2) + "\n";
    default:
      break;
  }
  const TraceInstance& t = *v.trace;
  j["scope"] = {{"State", v.scope}};
  j["loop"] = t.loop ? nlohmann::ordered_json(*t.loop) : nlohmann::ordered_json(nullptr);
  auto states = nlohmann::ordered_json::array();
  auto muts = mutable_names(resolved);
  for (int s = 0; s < t.k; ++s) {
    nlohmann::ordered_json st = nlohmann::ordered_json::object();
    for (const auto& m : muts) st[m] = tuples_json(t, t.mutables.at(m)[static_cast<std::size_t>(s)]);
    states.push_back(st);
  }
  j["states"] = states;
  nlohmann::ordered_json stat = nlohmann::ordered_json::object();
  for (const auto& s : static_names(resolved)) stat[s] = tuples_json(t, t.statics.at(s));
  j["static"] = stat;
  nlohmann::ordered_json sigs = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i + 1 < t.u.sigs.size(); ++i) sigs[t.u.sigs[i].sig] = present_atoms(t, t.u.sigs[i]);
  j["sigs"] = sigs;
  return j.dump(2) + "\n";
}

}  // namespace lbmc

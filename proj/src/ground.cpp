#include "lassobmc/ground.hpp"

#include <algorithm>
#include <set>

#include "lassobmc/errors.hpp"

namespace lbmc {

std::string VarMap::key(int relation, const std::vector<int>& tuple, int state) {
  std::string k = std::to_string(relation) + ":" + std::to_string(state);
  for (int a : tuple) k += "," + std::to_string(a);
  return k;
}

int VarMap::fact_var(int relation, const std::vector<int>& tuple, int state) const {
  auto it = fact_index.find(key(relation, tuple, state));
  return it == fact_index.end() ? 0 : it->second;
}

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Cartesian product of atom lists.
void tuples_of(const std::vector<const std::vector<int>*>& cols, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cols.size()) {
      out.push_back(cur);
      return;
    }
    for (int a : *cols[c]) {
      cur.push_back(a);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

Matrix join_impl(Circuit& c, const Matrix& a, const Matrix& b, std::size_t n) {
  Matrix out;
  out.arity = a.arity + b.arity - 2;
  std::size_t rest = ipow(n, b.arity - 1);
  out.cells.assign(ipow(n, out.arity), kFalse);
  std::vector<std::vector<std::pair<std::size_t, Lit>>> by_first(n);
  for (std::size_t i = 0; i < b.cells.size(); ++i)
    if (b.cells[i] != kFalse) by_first[i / rest].emplace_back(i % rest, b.cells[i]);
  std::vector<std::vector<Lit>> terms(out.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i] == kFalse) continue;
    std::size_t prefix = i / n, last = i % n;
    for (const auto& [r, lit] : by_first[last]) terms[prefix * rest + r].push_back(c.land(a.cells[i], lit));
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!terms[i].empty()) out.cells[i] = c.lor(std::move(terms[i]));
  return out;
}

Matrix merge(Circuit& c, const Matrix& a, const Matrix& b, ExprKind kind) {
  Matrix out{a.arity, std::vector<Lit>(a.cells.size(), kFalse)};
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    switch (kind) {
      case ExprKind::Union: out.cells[i] = c.lor(a.cells[i], b.cells[i]); break;
      case ExprKind::Inter: out.cells[i] = c.land(a.cells[i], b.cells[i]); break;
      default: out.cells[i] = c.land(a.cells[i], lit_not(b.cells[i])); break;
    }
  }
  return out;
}

}  // namespace

Matrix encode_closure(Circuit& c, const Matrix& r, int n, const std::vector<Lit>& identity) {
  if (r.arity != 2) throw InternalError("closure of a non-binary matrix");
  auto un = static_cast<std::size_t>(n);
  std::set<std::size_t> touched;
  for (std::size_t i = 0; i < r.cells.size(); ++i)
    if (r.cells[i] != kFalse) {
      touched.insert(i / un);
      touched.insert(i % un);
    }
  int rounds = 0;
  while ((std::size_t{1} << rounds) < touched.size()) ++rounds;
  Matrix acc = r;
  for (int i = 0; i < rounds; ++i) acc = merge(c, acc, join_impl(c, acc, acc, un), ExprKind::Union);
  if (!identity.empty())
    for (std::size_t a = 0; a < un; ++a) acc.cells[a * un + a] = c.lor(acc.cells[a * un + a], identity[a]);
  return acc;
}

Grounder::Grounder(const Spec& spec, const Universe& u, const TraceAxioms& trace, Idiom idiom)
    : spec_(spec), u_(u), trace_(trace), idiom_(idiom), rels_(relation_decls(spec)) {
  if (trace.k != u.k) throw InternalError("trace length and universe disagree");
  allocate();
  structural();
  cnf_.append(multiplicity_clauses());
}

void Grounder::allocate() {
  auto n = static_cast<std::size_t>(u_.size());
  vars_.presence.assign(n, 0);
  presence_lits_.assign(n, kTrue);
  for (const auto& s : u_.sigs) {
    if (s.exact) continue;
    for (int a : s.atoms) {
      int v = cnf_.new_var();
      VarMap::Entry e;
      e.kind = VarMap::Kind::Presence;
      e.atom = a;
      vars_.entries.push_back(e);
      vars_.presence[static_cast<std::size_t>(a)] = v;
      presence_lits_[static_cast<std::size_t>(a)] = circuit_.input(v);
    }
  }
  if (trace_.allow_loop) {
    for (int l = 0; l < trace_.k; ++l) {
      int v = cnf_.new_var();
      VarMap::Entry e;
      e.kind = VarMap::Kind::Loop;
      e.loop = l;
      vars_.entries.push_back(e);
      vars_.loops.push_back(v);
      loop_lits_.push_back(circuit_.input(v));
    }
  }
  for (std::size_t r = 0; r < rels_.size(); ++r) {
    const auto& rel = rels_[r];
    std::vector<const std::vector<int>*> cols;
    for (const auto& c : rel.columns) cols.push_back(&u_.sig(c).atoms);
    std::vector<std::vector<int>> tuples;
    tuples_of(cols, tuples);
    int arity = static_cast<int>(rel.columns.size()) + (rel.mutable_field ? 1 : 0);
    Matrix m = empty(arity);
    int states = rel.mutable_field ? trace_.k : 1;
    for (const auto& t : tuples) {
      for (int s = 0; s < states; ++s) {
        int state = rel.mutable_field ? s : -1;
        int v = cnf_.new_var();
        VarMap::Entry e;
        e.kind = VarMap::Kind::Fact;
        e.relation = static_cast<int>(r);
        e.tuple = t;
        e.state = state;
        vars_.entries.push_back(e);
        vars_.fact_index[VarMap::key(static_cast<int>(r), t, state)] = v;
        std::vector<int> cell = t;
        if (rel.mutable_field) {
          if (idiom_ == Idiom::Local)
            cell.push_back(u_.state_atom(s));
          else
            cell.insert(cell.begin(), u_.state_atom(s));
        }
        m.cells[index(cell)] = circuit_.input(v);
      }
    }
    field_matrix_.push_back(std::move(m));
  }
}

void Grounder::structural() {
  // Present atoms of a signature form a prefix of its atom list.
  for (const auto& s : u_.sigs) {
    if (s.exact) continue;
    for (std::size_t i = 1; i < s.atoms.size(); ++i)
      cnf_.add({-vars_.presence[static_cast<std::size_t>(s.atoms[i])],
                vars_.presence[static_cast<std::size_t>(s.atoms[i - 1])]});
  }
  // Tuples only relate present atoms.
  for (int v = 1; v <= vars_.num_primary(); ++v) {
    const auto& e = vars_.at(v);
    if (e.kind != VarMap::Kind::Fact) continue;
    std::set<int> guards;
    for (int a : e.tuple)
      if (int p = vars_.presence[static_cast<std::size_t>(a)]) guards.insert(p);
    for (int p : guards) cnf_.add({-v, p});
  }
  // One-hot loop selector (all false = no loop).
  for (std::size_t i = 0; i < vars_.loops.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.loops.size(); ++j) cnf_.add({-vars_.loops[i], -vars_.loops[j]});
}

Cnf Grounder::multiplicity_clauses() const {
  Cnf out;
  out.num_vars = cnf_.num_vars;
  for (std::size_t r = 0; r < rels_.size(); ++r) {
    const auto& rel = rels_[r];
    if (rel.mult == Mult::Set) continue;
    std::vector<const std::vector<int>*> prefix_cols;
    for (std::size_t c = 0; c + 1 < rel.columns.size(); ++c) prefix_cols.push_back(&u_.sig(rel.columns[c]).atoms);
    std::vector<std::vector<int>> prefixes;
    tuples_of(prefix_cols, prefixes);
    const auto& targets = u_.sig(rel.columns.back()).atoms;
    int states = rel.mutable_field ? trace_.k : 1;
    for (const auto& pre : prefixes) {
      std::set<int> guards;
      for (int a : pre)
        if (int p = vars_.presence[static_cast<std::size_t>(a)]) guards.insert(p);
      for (int s = 0; s < states; ++s) {
        int state = rel.mutable_field ? s : -1;
        std::vector<int> cands;
        for (int t : targets) {
          auto tuple = pre;
          tuple.push_back(t);
          cands.push_back(vars_.fact_var(static_cast<int>(r), tuple, state));
        }
        if (rel.mult == Mult::One || rel.mult == Mult::Some) {
          std::vector<int> alo;
          for (int p : guards) alo.push_back(-p);
          alo.insert(alo.end(), cands.begin(), cands.end());
          out.add(std::move(alo));
        }
        if (rel.mult == Mult::One || rel.mult == Mult::Lone)
          for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j) out.add({-cands[i], -cands[j]});
      }
    }
  }
  return out;
}

Lit Grounder::atom_present(int atom) const { return presence_lits_[static_cast<std::size_t>(atom)]; }

std::size_t Grounder::index(const std::vector<int>& tuple) const {
  std::size_t idx = 0;
  for (int a : tuple) idx = idx * static_cast<std::size_t>(u_.size()) + static_cast<std::size_t>(a);
  return idx;
}

Matrix Grounder::empty(int arity) const {
  return Matrix{arity, std::vector<Lit>(ipow(static_cast<std::size_t>(u_.size()), arity), kFalse)};
}

Matrix Grounder::next_closure(bool reflexive) const {
  Matrix m = empty(2);
  for (int i = 0; i < trace_.k; ++i)
    for (int j = 0; j < trace_.k; ++j) {
      Lit l = kFalse;
      if ((reflexive && i == j) || i < j) {
        l = kTrue;
      } else {
        std::vector<Lit> via;
        for (std::size_t loop = 0; loop < loop_lits_.size(); ++loop)
          if (static_cast<int>(loop) <= j) via.push_back(loop_lits_[loop]);
        l = const_cast<Circuit&>(circuit_).lor(std::move(via));
      }
      m.cells[index({u_.state_atom(i), u_.state_atom(j)})] = l;
    }
  return m;
}

Matrix Grounder::join(const Matrix& a, const Matrix& b) {
  return join_impl(circuit_, a, b, static_cast<std::size_t>(u_.size()));
}

Matrix Grounder::product(const Matrix& a, const Matrix& b) {
  Matrix out = empty(a.arity + b.arity);
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i] == kFalse) continue;
    for (std::size_t j = 0; j < b.cells.size(); ++j)
      if (b.cells[j] != kFalse) out.cells[i * b.cells.size() + j] = circuit_.land(a.cells[i], b.cells[j]);
  }
  return out;
}

bool Grounder::closed(const Expr& e) {
  auto it = closed_.find(&e);
  if (it != closed_.end()) return it->second;
  bool c = e.kind != ExprKind::VarRef;
  for (const auto& k : e.kids) c = closed(*k) && c;
  closed_[&e] = c;
  return c;
}

Matrix Grounder::expr(const ExprPtr& e) {
  bool cacheable = closed(*e) && !e->kids.empty();
  if (cacheable) {
    auto it = cache_.find(e.get());
    if (it != cache_.end()) return it->second;
  }
  Matrix out;
  switch (e->kind) {
    case ExprKind::SigRef: {
      out = empty(1);
      for (int a : u_.sig(e->name).atoms) out.cells[static_cast<std::size_t>(a)] = atom_present(a);
      break;
    }
    case ExprKind::StateSig:
      out = empty(1);
      for (int a : u_.states().atoms) out.cells[static_cast<std::size_t>(a)] = kTrue;
      break;
    case ExprKind::First:
      out = empty(1);
      out.cells[static_cast<std::size_t>(u_.state_atom(0))] = kTrue;
      break;
    case ExprKind::Last:
      out = empty(1);
      out.cells[static_cast<std::size_t>(u_.state_atom(trace_.k - 1))] = kTrue;
      break;
    case ExprKind::Next: {
      out = empty(2);
      for (int i = 0; i + 1 < trace_.k; ++i) out.cells[index({u_.state_atom(i), u_.state_atom(i + 1)})] = kTrue;
      for (std::size_t l = 0; l < loop_lits_.size(); ++l)
        out.cells[index({u_.state_atom(trace_.k - 1), u_.state_atom(static_cast<int>(l))})] = loop_lits_[l];
      break;
    }
    case ExprKind::FieldRef: {
      std::size_t r = 0;
      while (r < rels_.size() && rels_[r].name != e->name) ++r;
      if (r == rels_.size()) throw InternalError("unknown relation '" + e->name + "'");
      if (rels_[r].mutable_field && !e->with_state)
        throw InternalError("mutable field '" + e->name + "' reached grounding without a state");
      out = field_matrix_[r];
      break;
    }
    case ExprKind::VarRef: {
      out = empty(1);
      auto it = std::find_if(env_.rbegin(), env_.rend(), [&](const auto& b) { return b.first == e->name; });
      if (it == env_.rend()) throw InternalError("unbound variable '" + e->name + "' in grounding");
      out.cells[static_cast<std::size_t>(it->second)] = kTrue;
      break;
    }
    case ExprKind::None:
      out = empty(std::max(1, e->arity));
      break;
    case ExprKind::Join:
      out = join(expr(e->kids[0]), expr(e->kids[1]));
      break;
    case ExprKind::Product:
      out = product(expr(e->kids[0]), expr(e->kids[1]));
      break;
    case ExprKind::Union:
    case ExprKind::Inter:
    case ExprKind::Diff: {
      auto a = expr(e->kids[0]);
      auto b = expr(e->kids[1]);
      if (a.arity != b.arity) throw InternalError("arity mismatch in grounding");
      out = merge(circuit_, a, b, e->kind);
      break;
    }
    case ExprKind::Closure:
    case ExprKind::RClosure: {
      bool reflexive = e->kind == ExprKind::RClosure;
      if (e->kids[0]->kind == ExprKind::Next) {
        out = next_closure(reflexive);
      } else {
        std::vector<Lit> iden;
        if (reflexive) iden = presence_lits_;
        out = encode_closure(circuit_, expr(e->kids[0]), u_.size(), iden);
      }
      break;
    }
    case ExprKind::Name:
      throw InternalError("unresolved name '" + e->name + "' in grounding");
  }
  if (cacheable) cache_[e.get()] = out;
  return out;
}

Lit Grounder::some(const Matrix& m) {
  std::vector<Lit> lits;
  for (Lit l : m.cells)
    if (l != kFalse) lits.push_back(l);
  return circuit_.lor(std::move(lits));
}

Lit Grounder::lone(const Matrix& m) {
  std::vector<Lit> lits;
  for (Lit l : m.cells)
    if (l != kFalse) lits.push_back(l);
  std::vector<Lit> pairs;
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j) pairs.push_back(lit_not(circuit_.land(lits[i], lits[j])));
  return circuit_.land(std::move(pairs));
}

Lit Grounder::subset(const Matrix& a, const Matrix& b) {
  if (a.arity != b.arity) throw InternalError("arity mismatch in inclusion");
  std::vector<Lit> parts;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    if (a.cells[i] != kFalse) parts.push_back(circuit_.implies(a.cells[i], b.cells[i]));
  return circuit_.land(std::move(parts));
}

Lit Grounder::formula(const FormulaPtr& f) {
  using K = FormulaKind;
  switch (f->kind) {
    case K::True: return kTrue;
    case K::False: return kFalse;
    case K::In: return subset(expr(f->exprs[0]), expr(f->exprs[1]));
    case K::Eq: {
      auto a = expr(f->exprs[0]);
      auto b = expr(f->exprs[1]);
      return circuit_.land(subset(a, b), subset(b, a));
    }
    case K::No: return lit_not(some(expr(f->exprs[0])));
    case K::Some: return some(expr(f->exprs[0]));
    case K::Lone: return lone(expr(f->exprs[0]));
    case K::One: {
      auto m = expr(f->exprs[0]);
      return circuit_.land(some(m), lone(m));
    }
    case K::Not: return lit_not(formula(f->subs[0]));
    case K::And: return circuit_.land(formula(f->subs[0]), formula(f->subs[1]));
    case K::Or: return circuit_.lor(formula(f->subs[0]), formula(f->subs[1]));
    case K::Implies: return circuit_.implies(formula(f->subs[0]), formula(f->subs[1]));
    case K::All:
    case K::Exists: {
      auto dom = expr(f->exprs[0]);
      if (dom.arity != 1) throw InternalError("quantifier over a non-unary domain");
      std::vector<Lit> parts;
      for (std::size_t a = 0; a < dom.cells.size(); ++a) {
        if (dom.cells[a] == kFalse) continue;
        env_.emplace_back(f->var, static_cast<int>(a));
        Lit body = formula(f->subs[0]);
        env_.pop_back();
        parts.push_back(f->kind == K::All ? circuit_.implies(dom.cells[a], body) : circuit_.land(dom.cells[a], body));
      }
      return f->kind == K::All ? circuit_.land(std::move(parts)) : circuit_.lor(std::move(parts));
    }
    case K::Infinite: return circuit_.lor(loop_lits_);
    case K::Finite: return lit_not(circuit_.lor(loop_lits_));
    default:
      throw InternalError("temporal operator or call reached grounding");
  }
}

void Grounder::assert_formula(const FormulaPtr& f) { circuit_.assert_into(formula(f), cnf_); }

Grounding ground(const FormulaPtr& f, const Spec& spec, const Universe& u, const TraceAxioms& trace, Idiom idiom) {
  Grounder g(spec, u, trace, idiom);
  g.assert_formula(f);
  return Grounding{g.cnf(), g.vars()};
}

Cnf encode_multiplicities(const Spec& spec, const Universe& u) {
  Grounder g(spec, u, axiomatize_trace(u.k), Idiom::Local);
  return g.multiplicity_clauses();
}

}  // namespace lbmc

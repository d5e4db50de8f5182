#include "lassobmc/embed.hpp"

#include "lassobmc/errors.hpp"
#include "lassobmc/nnf.hpp"

namespace lbmc {

namespace {

void collect(const Expr& e, std::set<std::string>& out) {
  if (!e.name.empty()) out.insert(e.name);
  for (const auto& k : e.kids) collect(*k, out);
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (!f.var.empty()) out.insert(f.var);
  for (const auto& e : f.exprs) collect(*e, out);
  for (const auto& s : f.subs) collect(*s, out);
}

}  // namespace

Embedder::Embedder(const Spec& spec, EmbedOptions options) : options_(options) {
  for (const auto& s : spec.sigs) {
    used_.insert(s.name);
    for (const auto& f : s.fields) used_.insert(f.name);
  }
  for (const auto& f : spec.facts) collect(*f.body, used_);
  for (const auto& a : spec.asserts) collect(*a.body, used_);
  for (const auto& p : spec.preds) {
    collect(*p.body, used_);
    for (const auto& prm : p.params) used_.insert(prm.name);
  }
  if (spec.trans) collect(*spec.trans, used_);
}

std::string Embedder::fresh() {
  for (;;) {
    std::string cand = "s_" + std::to_string(++counter_);
    if (!used_.count(cand)) return cand;
  }
}

ExprPtr Embedder::at_state(const std::string& field, int arity, const ExprPtr& state) const {
  auto full = mk::state_field(field, arity + 1);
  return options_.idiom == Idiom::Local ? mk::join(full, state) : mk::join(state, full);
}

ExprPtr Embedder::embed_expr(const ExprPtr& e, const ExprPtr& state, const ExprPtr& primed_state) {
  switch (e->kind) {
    case ExprKind::FieldRef:
      if (!e->mutable_field || e->with_state) return e;
      return at_state(e->name, e->arity, e->primed ? primed_state : state);
    case ExprKind::Name:
      throw InternalError("embed: unresolved name '" + e->name + "'");
    default:
      break;
  }
  if (e->kids.empty()) return e;
  auto c = std::make_shared<Expr>(*e);
  c->kids.clear();
  for (const auto& k : e->kids) c->kids.push_back(embed_expr(k, state, primed_state));
  return c;
}

FormulaPtr Embedder::globally(const FormulaPtr& f, const ExprPtr& state) {
  std::string s1 = fresh();
  auto all = mk::quant(FormulaKind::All, s1, mk::join(state, mk::rclosure(mk::next())), embed(f, mk::var(s1)));
  if (options_.finite_traces) return all;
  return mk::conj(mk::infinite(), all);
}

FormulaPtr Embedder::embed(const FormulaPtr& f, const ExprPtr& state) {
  return embed_at(f, state, mk::join(state, mk::next()));
}

FormulaPtr Embedder::embed_at(const FormulaPtr& f, const ExprPtr& state, const ExprPtr& primed_state) {
  using K = FormulaKind;
  auto reach = [&](const ExprPtr& s) { return mk::join(s, mk::rclosure(mk::next())); };
  switch (f->kind) {
    case K::X: {
      auto succ = mk::join(state, mk::next());
      return mk::conj(mk::card(K::Some, succ), embed(f->subs[0], succ));
    }
    case K::Xw: {
      auto succ = mk::join(state, mk::next());
      return mk::disj(mk::card(K::No, succ), embed(f->subs[0], succ));
    }
    case K::G:
      return globally(f->subs[0], state);
    case K::F: {
      std::string s1 = fresh();
      return mk::quant(K::Exists, s1, reach(state), embed(f->subs[0], mk::var(s1)));
    }
    case K::U: {
      std::string s1 = fresh(), s2 = fresh();
      auto window = mk::binary(ExprKind::Inter, reach(state), mk::join(mk::closure(mk::next()), mk::var(s1)));
      auto before = mk::quant(K::All, s2, window, embed(f->subs[0], mk::var(s2)));
      return mk::quant(K::Exists, s1, reach(state), mk::conj(embed(f->subs[1], mk::var(s1)), before));
    }
    case K::R: {
      auto always = globally(f->subs[1], state);
      std::string s1 = fresh(), s2 = fresh();
      auto window = mk::binary(ExprKind::Inter, reach(state), mk::join(mk::rclosure(mk::next()), mk::var(s1)));
      auto upto = mk::quant(K::All, s2, window, embed(f->subs[1], mk::var(s2)));
      return mk::disj(always, mk::quant(K::Exists, s1, reach(state), mk::conj(embed(f->subs[0], mk::var(s1)), upto)));
    }
    case K::Call:
      throw InternalError("embed: predicate calls must be inlined first");
    case K::Implies:
    case K::Not:
      // Logical structure maps homomorphically; only temporal operators
      // under negation break the bounded semantics.
      if (contains_temporal(*f)) throw InternalError("embed: formula is not in negation normal form");
      break;
    default:
      break;
  }
  auto c = std::make_shared<Formula>(*f);
  c->exprs.clear();
  for (const auto& e : f->exprs) c->exprs.push_back(embed_expr(e, state, primed_state));
  c->subs.clear();
  for (const auto& s : f->subs) c->subs.push_back(embed_at(s, state, primed_state));
  return c;
}

FormulaPtr Embedder::translate_positive(const FormulaPtr& f) { return embed(nnf(f), mk::first()); }

FormulaPtr Embedder::counterexample_query(const FormulaPtr& f) { return embed(nnf(mk::negate(f)), mk::first()); }

FormulaPtr Embedder::translate_check(const FormulaPtr& f) { return mk::negate(counterexample_query(f)); }

FormulaPtr Embedder::desugar_trans(const FormulaPtr& t) {
  if (contains_temporal(*t)) throw InternalError("desugar_trans: temporal operator in transition");
  std::string s = fresh(), s1 = fresh();
  auto body = embed_at(t, mk::var(s), mk::var(s1));
  return mk::quant(FormulaKind::All, s, mk::state_sig(),
                   mk::quant(FormulaKind::All, s1, mk::join(mk::var(s), mk::next()), body));
}

}  // namespace lbmc

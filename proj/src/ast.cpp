#include "lassobmc/ast.hpp"

#include <algorithm>
#include <set>

namespace lbmc {

const SigDecl* Spec::find_sig(const std::string& name) const {
  for (const auto& s : sigs)
    if (s.name == name) return &s;
  return nullptr;
}

const FieldDecl* Spec::find_field(const std::string& name) const {
  for (const auto& s : sigs)
    for (const auto& f : s.fields)
      if (f.name == name) return &f;
  return nullptr;
}

const SigDecl* Spec::field_owner(const std::string& name) const {
  for (const auto& s : sigs)
    for (const auto& f : s.fields)
      if (f.name == name) return &s;
  return nullptr;
}

const PredDecl* Spec::find_pred(const std::string& name) const {
  for (const auto& p : preds)
    if (p.name == name) return &p;
  return nullptr;
}

const NamedFormula* Spec::find_assert(const std::string& name) const {
  for (const auto& a : asserts)
    if (a.name == name) return &a;
  return nullptr;
}

const Command* Spec::find_command(const std::string& target) const {
  for (const auto& c : cmds)
    if (c.target == target) return &c;
  return nullptr;
}

namespace mk {

namespace {
ExprPtr leaf(ExprKind kind, std::string id, int arity) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->name = std::move(id);
  e->arity = arity;
  return e;
}
}  // namespace

ExprPtr name(std::string id, SrcPos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Name;
  e->name = std::move(id);
  e->pos = pos;
  return e;
}

ExprPtr sig(std::string id) { return leaf(ExprKind::SigRef, std::move(id), 1); }

ExprPtr field(std::string id, int arity, bool mutable_field, bool primed) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::FieldRef;
  e->name = std::move(id);
  e->arity = arity;
  e->mutable_field = mutable_field;
  e->primed = primed;
  return e;
}

ExprPtr state_field(std::string id, int arity_with_state) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::FieldRef;
  e->name = std::move(id);
  e->arity = arity_with_state;
  e->mutable_field = true;
  e->with_state = true;
  return e;
}

ExprPtr var(std::string id) { return leaf(ExprKind::VarRef, std::move(id), 1); }
ExprPtr state_sig() { return leaf(ExprKind::StateSig, "State", 1); }
ExprPtr first() { return leaf(ExprKind::First, "first", 1); }
ExprPtr last() { return leaf(ExprKind::Last, "last", 1); }
ExprPtr next() { return leaf(ExprKind::Next, "next", 2); }
ExprPtr none(int arity) { return leaf(ExprKind::None, "none", arity); }

ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  int a = lhs->arity, b = rhs->arity;
  if (a > 0 && b > 0) {
    switch (kind) {
      case ExprKind::Join: e->arity = a + b - 2; break;
      case ExprKind::Product: e->arity = a + b; break;
      default: e->arity = a; break;
    }
  }
  e->kids = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr join(ExprPtr lhs, ExprPtr rhs) { return binary(ExprKind::Join, std::move(lhs), std::move(rhs)); }

ExprPtr closure(ExprPtr e) {
  auto r = std::make_shared<Expr>();
  r->kind = ExprKind::Closure;
  r->arity = 2;
  r->kids = {std::move(e)};
  return r;
}

ExprPtr rclosure(ExprPtr e) {
  auto r = std::make_shared<Expr>();
  r->kind = ExprKind::RClosure;
  r->arity = 2;
  r->kids = {std::move(e)};
  return r;
}

namespace {
std::shared_ptr<Formula> node(FormulaKind kind) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  return f;
}
}  // namespace

FormulaPtr truth() { return node(FormulaKind::True); }
FormulaPtr falsity() { return node(FormulaKind::False); }

FormulaPtr in(ExprPtr lhs, ExprPtr rhs) {
  auto f = node(FormulaKind::In);
  f->exprs = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr eq(ExprPtr lhs, ExprPtr rhs) {
  auto f = node(FormulaKind::Eq);
  f->exprs = {std::move(lhs), std::move(rhs)};
  return f;
}

FormulaPtr card(FormulaKind kind, ExprPtr e) {
  auto f = node(kind);
  f->exprs = {std::move(e)};
  return f;
}

FormulaPtr negate(FormulaPtr g) { return unary(FormulaKind::Not, std::move(g)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }

FormulaPtr quant(FormulaKind kind, std::string v, ExprPtr domain, FormulaPtr body) {
  auto f = node(kind);
  f->var = std::move(v);
  f->exprs = {std::move(domain)};
  f->subs = {std::move(body)};
  return f;
}

FormulaPtr unary(FormulaKind kind, FormulaPtr g) {
  auto f = node(kind);
  f->subs = {std::move(g)};
  return f;
}

FormulaPtr binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  auto f = node(kind);
  f->subs = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr call(std::string pred, std::vector<ExprPtr> args) {
  auto f = node(FormulaKind::Call);
  f->var = std::move(pred);
  f->exprs = std::move(args);
  return f;
}

FormulaPtr infinite() { return node(FormulaKind::Infinite); }
FormulaPtr finite() { return node(FormulaKind::Finite); }

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return truth();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

}  // namespace mk

bool is_temporal(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::X:
    case FormulaKind::Xw:
    case FormulaKind::G:
    case FormulaKind::F:
    case FormulaKind::U:
    case FormulaKind::R:
      return true;
    default:
      return false;
  }
}

bool is_atom(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::In:
    case FormulaKind::Eq:
    case FormulaKind::No:
    case FormulaKind::Some:
    case FormulaKind::Lone:
    case FormulaKind::One:
    case FormulaKind::Infinite:
    case FormulaKind::Finite:
    case FormulaKind::Call:
      return true;
    default:
      return false;
  }
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.primed != b.primed || a.with_state != b.with_state ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!same_expr(*a.kids[i], *b.kids[i])) return false;
  return true;
}

bool same_formula(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.var != b.var || a.subs.size() != b.subs.size() || a.exprs.size() != b.exprs.size())
    return false;
  for (std::size_t i = 0; i < a.exprs.size(); ++i)
    if (!same_expr(*a.exprs[i], *b.exprs[i])) return false;
  for (std::size_t i = 0; i < a.subs.size(); ++i)
    if (!same_formula(*a.subs[i], *b.subs[i])) return false;
  return true;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& s : f.subs) n += formula_size(*s);
  return n;
}

bool contains_temporal(const Formula& f) {
  if (is_temporal(f.kind)) return true;
  return std::any_of(f.subs.begin(), f.subs.end(), [](const FormulaPtr& s) { return contains_temporal(*s); });
}

bool contains_prime(const Expr& e) {
  if (e.primed) return true;
  return std::any_of(e.kids.begin(), e.kids.end(), [](const ExprPtr& k) { return contains_prime(*k); });
}

bool contains_prime(const Formula& f) {
  for (const auto& e : f.exprs)
    if (contains_prime(*e)) return true;
  return std::any_of(f.subs.begin(), f.subs.end(), [](const FormulaPtr& s) { return contains_prime(*s); });
}

namespace {

void collect_free(const Expr& e, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (e.kind == ExprKind::VarRef && !bound.count(e.name)) out.insert(e.name);
  for (const auto& k : e.kids) collect_free(*k, bound, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.kind == FormulaKind::All || f.kind == FormulaKind::Exists) {
    collect_free(*f.exprs[0], bound, out);
    bool fresh = bound.insert(f.var).second;
    collect_free(*f.subs[0], bound, out);
    if (fresh) bound.erase(f.var);
    return;
  }
  for (const auto& e : f.exprs) collect_free(*e, bound, out);
  for (const auto& s : f.subs) collect_free(*s, bound, out);
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return {out.begin(), out.end()};
}

}  // namespace lbmc

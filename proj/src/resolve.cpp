#include "lassobmc/resolve.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "lassobmc/errors.hpp"
#include "lassobmc/printer.hpp"

namespace lbmc {

namespace {

const std::set<std::string>& reserved() {
  static const std::set<std::string> r = {"State", "first", "last", "next", "infinite", "finite", "univ", "iden"};
  return r;
}

using Columns = std::optional<std::vector<std::string>>;

struct Binding {
  std::string name;
  std::string type;  // signature name when known
};

std::shared_ptr<Expr> clone(const Expr& e) { return std::make_shared<Expr>(e); }
std::shared_ptr<Formula> clone(const Formula& f) { return std::make_shared<Formula>(f); }

ExprPtr coerce_none(const ExprPtr& e, int arity) {
  if (e->arity != 0) return e;
  auto c = clone(*e);
  c->arity = arity;
  return c;
}

SrcPos first_prime_pos(const Expr& e) {
  if (e.primed) return e.pos;
  for (const auto& k : e.kids)
    if (contains_prime(*k)) return first_prime_pos(*k);
  return e.pos;
}

SrcPos first_prime_pos(const Formula& f) {
  for (const auto& e : f.exprs)
    if (contains_prime(*e)) return first_prime_pos(*e);
  for (const auto& s : f.subs)
    if (contains_prime(*s)) return first_prime_pos(*s);
  return f.pos;
}

SrcPos first_temporal_pos(const Formula& f) {
  if (is_temporal(f.kind)) return f.pos;
  for (const auto& s : f.subs)
    if (contains_temporal(*s)) return first_temporal_pos(*s);
  return f.pos;
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (!e.name.empty()) out.insert(e.name);
  for (const auto& k : e.kids) collect_names(*k, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  if (!f.var.empty()) out.insert(f.var);
  for (const auto& e : f.exprs) collect_names(*e, out);
  for (const auto& s : f.subs) collect_names(*s, out);
}

class Resolver {
 public:
  Resolver(const Spec& spec, std::vector<std::string>* warnings) : spec_(spec), warnings_(warnings) {}

  ExprPtr expr(const ExprPtr& e) {
    switch (e->kind) {
      case ExprKind::Name:
      case ExprKind::SigRef:
      case ExprKind::FieldRef:
      case ExprKind::VarRef:
        return reference(e);
      case ExprKind::None: {
        auto c = clone(*e);
        return c;
      }
      case ExprKind::Closure:
      case ExprKind::RClosure: {
        auto inner = coerce_none(expr(e->kids[0]), 2);
        if (inner->arity != 2)
          throw ResolveError("closure needs a binary relation, got arity " + std::to_string(inner->arity), e->pos);
        auto cols = columns(*inner);
        if (cols && (*cols)[0] != (*cols)[1] && warnings_)
          warnings_->push_back("line " + std::to_string(e->pos.line) + ", column " + std::to_string(e->pos.column) +
                               ": closure of non-square relation (" + (*cols)[0] + " -> " + (*cols)[1] + ")");
        auto c = clone(*e);
        c->kids = {inner};
        c->arity = 2;
        return c;
      }
      case ExprKind::Join:
      case ExprKind::Union:
      case ExprKind::Inter:
      case ExprKind::Diff:
      case ExprKind::Product: {
        auto l = expr(e->kids[0]);
        auto r = expr(e->kids[1]);
        auto c = clone(*e);
        if (e->kind == ExprKind::Join || e->kind == ExprKind::Product) {
          l = coerce_none(l, 1);
          r = coerce_none(r, 1);
          c->arity = e->kind == ExprKind::Join ? l->arity + r->arity - 2 : l->arity + r->arity;
          if (c->arity < 1) throw ResolveError("join of two unary expressions has arity 0", e->pos);
        } else {
          if (l->arity == 0 && r->arity == 0) {
            l = coerce_none(l, 1);
            r = coerce_none(r, 1);
          }
          l = coerce_none(l, r->arity);
          r = coerce_none(r, l->arity);
          if (l->arity != r->arity)
            throw ResolveError("arity mismatch: " + std::to_string(l->arity) + " vs " + std::to_string(r->arity),
                               e->pos);
          c->arity = l->arity;
        }
        c->kids = {l, r};
        return c;
      }
      case ExprKind::StateSig:
      case ExprKind::First:
      case ExprKind::Last:
      case ExprKind::Next:
        throw ResolveError("trace relation '" + e->name + "' is not available in specifications", e->pos);
    }
    throw InternalError("unhandled expression kind");
  }

  FormulaPtr formula(const FormulaPtr& f) {
    auto c = clone(*f);
    switch (f->kind) {
      case FormulaKind::In:
      case FormulaKind::Eq: {
        auto l = expr(f->exprs[0]);
        auto r = expr(f->exprs[1]);
        if (l->arity == 0 && r->arity == 0) {
          l = coerce_none(l, 1);
          r = coerce_none(r, 1);
        }
        l = coerce_none(l, r->arity);
        r = coerce_none(r, l->arity);
        if (l->arity != r->arity)
          throw ResolveError("arity mismatch in comparison: " + std::to_string(l->arity) + " vs " +
                                 std::to_string(r->arity),
                             f->pos);
        c->exprs = {l, r};
        return c;
      }
      case FormulaKind::No:
      case FormulaKind::Some:
      case FormulaKind::Lone:
      case FormulaKind::One:
        c->exprs = {coerce_none(expr(f->exprs[0]), 1)};
        return c;
      case FormulaKind::All:
      case FormulaKind::Exists: {
        auto dom = coerce_none(expr(f->exprs[0]), 1);
        if (dom->arity != 1)
          throw ResolveError("quantifier domain must be a set, got arity " + std::to_string(dom->arity), f->pos);
        auto cols = columns(*dom);
        scope_.push_back({f->var, cols ? (*cols)[0] : std::string()});
        auto body = formula(f->subs[0]);
        scope_.pop_back();
        c->exprs = {dom};
        c->subs = {body};
        return c;
      }
      case FormulaKind::Call: {
        const PredDecl* p = spec_.find_pred(f->var);
        if (!p) throw ResolveError("unknown predicate '" + f->var + "'", f->pos);
        if (p->params.size() != f->exprs.size())
          throw ResolveError("predicate '" + f->var + "' expects " + std::to_string(p->params.size()) +
                                 " arguments, got " + std::to_string(f->exprs.size()),
                             f->pos);
        c->exprs.clear();
        for (const auto& a : f->exprs) {
          auto r = coerce_none(expr(a), 1);
          if (r->arity != 1) throw ResolveError("predicate argument must be a set", a->pos);
          c->exprs.push_back(r);
        }
        return c;
      }
      case FormulaKind::Infinite:
      case FormulaKind::Finite:
        throw ResolveError("trace predicate is not available in specifications", f->pos);
      default:
        c->subs.clear();
        for (const auto& s : f->subs) c->subs.push_back(formula(s));
        return c;
    }
  }

  void bind(const std::string& name, const std::string& type) { scope_.push_back({name, type}); }

  Columns columns(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::SigRef: return std::vector<std::string>{e.name};
      case ExprKind::VarRef: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->name == e.name) {
            if (it->type.empty()) return std::nullopt;
            return std::vector<std::string>{it->type};
          }
        return std::nullopt;
      }
      case ExprKind::FieldRef: {
        const SigDecl* owner = spec_.field_owner(e.name);
        const FieldDecl* fd = spec_.find_field(e.name);
        if (!owner || !fd) return std::nullopt;
        std::vector<std::string> cols{owner->name};
        cols.insert(cols.end(), fd->columns.begin(), fd->columns.end());
        return cols;
      }
      case ExprKind::Join: {
        auto l = columns(*e.kids[0]), r = columns(*e.kids[1]);
        if (!l || !r) return std::nullopt;
        std::vector<std::string> out(l->begin(), l->end() - 1);
        out.insert(out.end(), r->begin() + 1, r->end());
        return out;
      }
      case ExprKind::Product: {
        auto l = columns(*e.kids[0]), r = columns(*e.kids[1]);
        if (!l || !r) return std::nullopt;
        l->insert(l->end(), r->begin(), r->end());
        return l;
      }
      case ExprKind::Union:
      case ExprKind::Inter: {
        auto l = columns(*e.kids[0]), r = columns(*e.kids[1]);
        if (l && r && *l == *r) return l;
        return std::nullopt;
      }
      case ExprKind::Diff:
        return columns(*e.kids[0]);
      case ExprKind::Closure:
      case ExprKind::RClosure:
        return columns(*e.kids[0]);
      default:
        return std::nullopt;
    }
  }

 private:
  ExprPtr reference(const ExprPtr& e) {
    auto c = clone(*e);
    bool bound = false;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == e->name) bound = true;
    if (bound && e->kind != ExprKind::SigRef && e->kind != ExprKind::FieldRef) {
      if (e->primed) throw ResolveError("variable '" + e->name + "' cannot be primed", e->pos);
      c->kind = ExprKind::VarRef;
      c->arity = 1;
      return c;
    }
    if (e->kind == ExprKind::VarRef) throw ResolveError("unbound variable '" + e->name + "'", e->pos);
    if (const FieldDecl* fd = spec_.find_field(e->name); fd && e->kind != ExprKind::SigRef) {
      if (e->primed && !fd->mutable_field)
        throw ResolveError("only mutable fields can be primed: '" + e->name + "'", e->pos);
      c->kind = ExprKind::FieldRef;
      c->mutable_field = fd->mutable_field;
      c->with_state = false;
      c->arity = fd->arity();
      return c;
    }
    if (spec_.find_sig(e->name) && e->kind != ExprKind::FieldRef) {
      if (e->primed) throw ResolveError("signatures cannot be primed: '" + e->name + "'", e->pos);
      c->kind = ExprKind::SigRef;
      c->arity = 1;
      return c;
    }
    throw ResolveError("unknown identifier '" + e->name + "'", e->pos);
  }

  const Spec& spec_;
  std::vector<std::string>* warnings_;
  std::vector<Binding> scope_;
};

class Inliner {
 public:
  Inliner(const Spec& spec, std::set<std::string> used) : spec_(spec), used_(std::move(used)) {}

  /// `preds` holds already inlined bodies keyed by name.
  FormulaPtr inline_calls(const FormulaPtr& f, const std::map<std::string, const PredDecl*>& preds) {
    if (f->kind == FormulaKind::Call) {
      auto it = preds.find(f->var);
      if (it == preds.end()) throw InternalError("call to predicate not yet inlined: " + f->var);
      const PredDecl& p = *it->second;
      std::map<std::string, ExprPtr> sub;
      for (std::size_t i = 0; i < p.params.size(); ++i) sub[p.params[i].name] = f->exprs[i];
      return substitute(p.body, sub);
    }
    if (f->subs.empty()) return f;
    auto c = clone(*f);
    c->subs.clear();
    for (const auto& s : f->subs) c->subs.push_back(inline_calls(s, preds));
    return c;
  }

  std::string fresh(const std::string& base) {
    for (int n = 1;; ++n) {
      std::string cand = base + "_" + std::to_string(n);
      if (used_.insert(cand).second) return cand;
    }
  }

 private:
  static void free_in(const Expr& e, std::set<std::string>& out) {
    if (e.kind == ExprKind::VarRef) out.insert(e.name);
    for (const auto& k : e.kids) free_in(*k, out);
  }

  static ExprPtr substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& sub) {
    if (e->kind == ExprKind::VarRef) {
      auto it = sub.find(e->name);
      return it == sub.end() ? e : it->second;
    }
    if (e->kids.empty()) return e;
    auto c = clone(*e);
    c->kids.clear();
    for (const auto& k : e->kids) c->kids.push_back(substitute(k, sub));
    return c;
  }

  FormulaPtr substitute(const FormulaPtr& f, std::map<std::string, ExprPtr> sub) {
    if (sub.empty()) return f;
    auto c = clone(*f);
    c->exprs.clear();
    for (const auto& e : f->exprs) c->exprs.push_back(substitute(e, sub));
    if (f->kind == FormulaKind::All || f->kind == FormulaKind::Exists) {
      sub.erase(f->var);
      std::set<std::string> captured;
      for (const auto& [k, v] : sub) free_in(*v, captured);
      if (captured.count(f->var)) {
        std::string renamed = fresh(f->var);
        sub[f->var] = mk::var(renamed);
        c->var = renamed;
      }
    }
    c->subs.clear();
    for (const auto& s : f->subs) c->subs.push_back(substitute(s, sub));
    return c;
  }

  const Spec& spec_;
  std::set<std::string> used_;
};

void collect_calls(const Formula& f, std::set<std::string>& out) {
  if (f.kind == FormulaKind::Call) out.insert(f.var);
  for (const auto& s : f.subs) collect_calls(*s, out);
}

SrcPos find_call_pos(const Formula& f, const std::string& name) {
  if (f.kind == FormulaKind::Call && f.var == name) return f.pos;
  for (const auto& s : f.subs) {
    std::set<std::string> calls;
    collect_calls(*s, calls);
    if (calls.count(name)) return find_call_pos(*s, name);
  }
  return f.pos;
}

}  // namespace

Spec resolve(const Spec& in) {
  Spec out = in;
  out.warnings.clear();

  // Declarations.
  std::set<std::string> top;
  auto declare = [&](const std::string& name, SrcPos pos, const char* what) {
    if (reserved().count(name)) throw ResolveError(std::string(what) + " name '" + name + "' is reserved", pos);
    if (!top.insert(name).second) throw ResolveError("duplicate declaration '" + name + "'", pos);
  };
  for (const auto& s : in.sigs) declare(s.name, s.pos, "signature");
  for (const auto& s : in.sigs) {
    std::set<std::string> local;
    for (const auto& f : s.fields) {
      if (!local.insert(f.name).second)
        throw ResolveError("duplicate field '" + f.name + "' in signature " + s.name, f.pos);
      declare(f.name, f.pos, "field");
      for (const auto& col : f.columns)
        if (!in.find_sig(col)) throw ResolveError("unknown signature '" + col + "'", f.pos);
    }
  }
  for (const auto& f : in.facts) declare(f.name, f.pos, "fact");
  for (const auto& p : in.preds) declare(p.name, p.pos, "predicate");
  for (const auto& a : in.asserts) declare(a.name, a.pos, "assertion");

  std::set<std::string> used = top;
  for (const auto& f : in.facts) collect_names(*f.body, used);
  for (const auto& a : in.asserts) collect_names(*a.body, used);
  for (const auto& p : in.preds) {
    collect_names(*p.body, used);
    for (const auto& prm : p.params) used.insert(prm.name);
  }
  if (in.trans) collect_names(*in.trans, used);

  // Predicate bodies, with calls still in place.
  Resolver resolver(in, &out.warnings);
  for (auto& p : out.preds) {
    std::set<std::string> seen;
    Resolver local(in, &out.warnings);
    for (auto& prm : p.params) {
      if (!seen.insert(prm.name).second) throw ResolveError("duplicate parameter '" + prm.name + "'", p.pos);
      prm.domain = coerce_none(local.expr(prm.domain), 1);
      if (prm.domain->arity != 1) throw ResolveError("parameter domain must be a set", p.pos);
      auto cols = local.columns(*prm.domain);
      local.bind(prm.name, cols ? (*cols)[0] : std::string());
    }
    p.body = local.formula(p.body);
  }

  // Reject recursion, then inline in dependency order.
  std::map<std::string, std::set<std::string>> calls;
  for (const auto& p : out.preds) collect_calls(*p.body, calls[p.name]);
  std::map<std::string, int> mark;  // 1 = on stack, 2 = done
  std::vector<std::string> order;
  std::function<void(const PredDecl&)> visit = [&](const PredDecl& p) {
    mark[p.name] = 1;
    for (const auto& callee : calls[p.name]) {
      if (mark[callee] == 1)
        throw ResolveError("recursive predicate '" + callee + "'", find_call_pos(*p.body, callee));
      if (mark[callee] == 0) visit(*out.find_pred(callee));
    }
    mark[p.name] = 2;
    order.push_back(p.name);
  };
  for (const auto& p : out.preds)
    if (mark[p.name] == 0) visit(p);

  Inliner inliner(out, used);
  std::map<std::string, const PredDecl*> done;
  for (const auto& name : order) {
    for (auto& p : out.preds) {
      if (p.name != name) continue;
      p.body = inliner.inline_calls(p.body, done);
      done[name] = &p;
    }
  }

  auto resolve_closed = [&](const FormulaPtr& f) { return inliner.inline_calls(resolver.formula(f), done); };

  for (auto& f : out.facts) {
    f.body = resolve_closed(f.body);
    if (contains_prime(*f.body))
      throw ResolveError("primed reference outside the transition context", first_prime_pos(*f.body));
  }
  for (auto& a : out.asserts) {
    a.body = resolve_closed(a.body);
    if (contains_prime(*a.body))
      throw ResolveError("primed reference outside the transition context", first_prime_pos(*a.body));
  }
  if (out.trans) {
    out.trans = resolve_closed(out.trans);
    if (contains_temporal(*out.trans))
      throw ResolveError("temporal operator inside trans", first_temporal_pos(*out.trans));
  }

  for (auto& c : out.cmds) {
    if (c.inline_target) {
      c.inline_target = resolve_closed(c.inline_target);
      if (contains_prime(*c.inline_target))
        throw ResolveError("primed reference outside the transition context", first_prime_pos(*c.inline_target));
    } else if (c.kind == CommandKind::Check) {
      if (!out.find_assert(c.target)) throw ResolveError("check target '" + c.target + "' is not an assertion", c.pos);
    } else {
      if (!out.find_pred(c.target) && !out.find_assert(c.target))
        throw ResolveError("run target '" + c.target + "' is not a predicate or assertion", c.pos);
      if (const PredDecl* p = out.find_pred(c.target); p && contains_prime(*p->body))
        throw ResolveError("primed reference outside the transition context", first_prime_pos(*p->body));
    }
    for (const auto& [sig, sc] : c.scopes)
      if (!out.find_sig(sig)) throw ResolveError("scope for unknown signature '" + sig + "'", c.pos);
  }

  out.resolved = true;
  return out;
}

FormulaPtr resolve_formula(const Spec& resolved, const FormulaPtr& f) {
  Resolver resolver(resolved, nullptr);
  std::set<std::string> used;
  for (const auto& s : resolved.sigs) {
    used.insert(s.name);
    for (const auto& fd : s.fields) used.insert(fd.name);
  }
  collect_names(*f, used);
  Inliner inliner(resolved, used);
  std::map<std::string, const PredDecl*> preds;
  for (const auto& p : resolved.preds) preds[p.name] = &p;
  auto out = inliner.inline_calls(resolver.formula(f), preds);
  if (contains_prime(*out))
    throw ResolveError("primed reference outside the transition context", first_prime_pos(*out));
  return out;
}

FormulaPtr command_target(const Spec& resolved, const Command& cmd) {
  if (cmd.inline_target) return cmd.inline_target;
  if (const NamedFormula* a = resolved.find_assert(cmd.target)) return a->body;
  if (cmd.kind == CommandKind::Run) {
    if (const PredDecl* p = resolved.find_pred(cmd.target)) {
      FormulaPtr body = p->body;
      for (auto it = p->params.rbegin(); it != p->params.rend(); ++it)
        body = mk::quant(FormulaKind::Exists, it->name, it->domain, body);
      return body;
    }
  }
  throw ResolveError("unknown command target '" + cmd.target + "'", cmd.pos);
}

}  // namespace lbmc

#include "lassobmc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lassobmc/errors.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/trace.hpp"

namespace lbmc {

std::optional<int> TraceInstance::successor(int i) const {
  if (i + 1 < k) return i + 1;
  return loop;
}

namespace {

struct Rel {
  int arity = 1;
  std::vector<char> bits;
};

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

class Evaluator {
 public:
  Evaluator(const TraceInstance& t, Idiom idiom) : t_(t), n_(static_cast<std::size_t>(t.u.size())), idiom_(idiom) {
    next_ = empty(2);
    for (int i = 0; i < t.k; ++i)
      if (auto s = t.successor(i)) next_.bits[idx2(state(i), state(*s))] = 1;
  }

  bool holds(const Formula& f, int pos) {
    using K = FormulaKind;
    switch (f.kind) {
      case K::True: return true;
      case K::False: return false;
      case K::In: return subset(expr(*f.exprs[0], pos), expr(*f.exprs[1], pos));
      case K::Eq: {
        auto a = expr(*f.exprs[0], pos);
        auto b = expr(*f.exprs[1], pos);
        return a.bits == b.bits;
      }
      case K::No: return count(expr(*f.exprs[0], pos)) == 0;
      case K::Some: return count(expr(*f.exprs[0], pos)) > 0;
      case K::Lone: return count(expr(*f.exprs[0], pos)) <= 1;
      case K::One: return count(expr(*f.exprs[0], pos)) == 1;
      case K::Not: return !holds(*f.subs[0], pos);
      case K::And: return holds(*f.subs[0], pos) && holds(*f.subs[1], pos);
      case K::Or: return holds(*f.subs[0], pos) || holds(*f.subs[1], pos);
      case K::Implies: return !holds(*f.subs[0], pos) || holds(*f.subs[1], pos);
      case K::All:
      case K::Exists: {
        auto dom = expr(*f.exprs[0], pos);
        bool all = f.kind == K::All;
        for (std::size_t a = 0; a < dom.bits.size(); ++a) {
          if (!dom.bits[a]) continue;
          env_.emplace_back(f.var, static_cast<int>(a));
          bool b = holds(*f.subs[0], pos);
          env_.pop_back();
          if (all && !b) return false;
          if (!all && b) return true;
        }
        return all;
      }
      case K::Infinite: return t_.loop.has_value();
      case K::Finite: return !t_.loop.has_value();
      default:
        throw InternalError("temporal operator in first-order evaluation: " + to_string(f));
    }
  }

  // Truth value of f at every position.
  std::vector<bool> ltl(const Formula& f) {
    using K = FormulaKind;
    auto k = static_cast<std::size_t>(t_.k);
    std::vector<bool> out(k, false);
    if (!temporal(f)) {
      for (std::size_t j = 0; j < k; ++j) out[j] = holds(f, static_cast<int>(j));
      return out;
    }
    switch (f.kind) {
      case K::Not: {
        auto a = ltl(*f.subs[0]);
        for (std::size_t j = 0; j < k; ++j) out[j] = !a[j];
        return out;
      }
      case K::And:
      case K::Or:
      case K::Implies: {
        auto a = ltl(*f.subs[0]);
        auto b = ltl(*f.subs[1]);
        for (std::size_t j = 0; j < k; ++j)
          out[j] = f.kind == K::And ? (a[j] && b[j]) : f.kind == K::Or ? (a[j] || b[j]) : (!a[j] || b[j]);
        return out;
      }
      case K::All:
      case K::Exists: {
        bool all = f.kind == K::All;
        std::map<int, std::vector<bool>> bodies;
        for (std::size_t j = 0; j < k; ++j) {
          auto dom = expr(*f.exprs[0], static_cast<int>(j));
          bool acc = all;
          for (std::size_t a = 0; a < dom.bits.size(); ++a) {
            if (!dom.bits[a]) continue;
            auto it = bodies.find(static_cast<int>(a));
            if (it == bodies.end()) {
              env_.emplace_back(f.var, static_cast<int>(a));
              it = bodies.emplace(static_cast<int>(a), ltl(*f.subs[0])).first;
              env_.pop_back();
            }
            bool b = it->second[j];
            if (all && !b) acc = false;
            if (!all && b) acc = true;
          }
          out[j] = acc;
        }
        return out;
      }
      case K::X:
      case K::Xw: {
        auto a = ltl(*f.subs[0]);
        for (std::size_t j = 0; j < k; ++j) {
          auto s = t_.successor(static_cast<int>(j));
          out[j] = s ? a[static_cast<std::size_t>(*s)] : f.kind == K::Xw;
        }
        return out;
      }
      case K::G:
      case K::F: {
        auto a = ltl(*f.subs[0]);
        std::vector<bool> none(k, f.kind == K::G);
        return f.kind == K::G ? fixpoint(a, none, true) : fixpoint(a, std::vector<bool>(k, false), false);
      }
      case K::U: {
        // Z = psi or (phi and X Z), least
        auto phi = ltl(*f.subs[0]);
        auto psi = ltl(*f.subs[1]);
        std::vector<bool> z(k, false);
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t j = k; j-- > 0;) {
            auto s = t_.successor(static_cast<int>(j));
            bool v = psi[j] || (phi[j] && s && z[static_cast<std::size_t>(*s)]);
            if (v != z[j]) {
              z[j] = v;
              changed = true;
            }
          }
        }
        return z;
      }
      case K::R: {
        // Z = psi and (phi or X Z), greatest; X is strong at the end of a
        // loop-free prefix
        auto phi = ltl(*f.subs[0]);
        auto psi = ltl(*f.subs[1]);
        std::vector<bool> z(k, true);
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t j = k; j-- > 0;) {
            auto s = t_.successor(static_cast<int>(j));
            bool v = psi[j] && (phi[j] || (s && z[static_cast<std::size_t>(*s)]));
            if (v != z[j]) {
              z[j] = v;
              changed = true;
            }
          }
        }
        return z;
      }
      default:
        throw InternalError("unexpected formula in LTL evaluation: " + to_string(f));
    }
  }

 private:
  // G: greatest fixpoint of Z = a and X Z; F: least fixpoint of Z = a or X Z.
  std::vector<bool> fixpoint(const std::vector<bool>& a, std::vector<bool> z, bool greatest) {
    auto k = a.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = k; j-- > 0;) {
        auto s = t_.successor(static_cast<int>(j));
        bool next = s && z[static_cast<std::size_t>(*s)];
        bool v = greatest ? (a[j] && next) : (a[j] || next);
        if (v != z[j]) {
          z[j] = v;
          changed = true;
        }
      }
    }
    return z;
  }

  bool temporal(const Formula& f) {
    auto it = temporal_.find(&f);
    if (it != temporal_.end()) return it->second;
    bool v = contains_temporal(f);
    temporal_[&f] = v;
    return v;
  }

  int state(int i) const { return t_.u.state_atom(i); }
  std::size_t idx2(int a, int b) const { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }
  Rel empty(int arity) const { return Rel{arity, std::vector<char>(ipow(n_, arity), 0)}; }

  // Dense relation of the given arity from owner-first tuples; `s >= 0`
  // adds the State column of state s.
  void add_dense(Rel& r, const TupleSet& tuples, int s) const {
    for (const auto& t : tuples) {
      Tuple full = t;
      if (s >= 0) {
        if (idiom_ == Idiom::Local)
          full.push_back(state(s));
        else
          full.insert(full.begin(), state(s));
      }
      if (static_cast<int>(full.size()) != r.arity) throw InternalError("tuple arity mismatch in trace instance");
      std::size_t i = 0;
      for (int a : full) i = i * n_ + static_cast<std::size_t>(a);
      r.bits[i] = 1;
    }
  }

  Rel field(const Expr& e, int pos) {
    int s = -1;  // static value
    if (e.mutable_field && e.with_state) {
      s = -2;  // whole relation
    } else if (e.mutable_field) {
      if (pos < 0) throw InternalError("mutable field '" + e.name + "' evaluated without a state");
      s = pos;
      if (e.primed) {
        auto succ = t_.successor(pos);
        if (!succ) throw InternalError("primed field at a state without successor");
        s = *succ;
      }
    }
    std::string key = e.name + "#" + std::to_string(s);
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second;
    Rel r = empty(e.arity);
    if (!e.mutable_field) {
      auto v = t_.statics.find(e.name);
      if (v != t_.statics.end()) add_dense(r, v->second, -1);
    } else {
      auto v = t_.mutables.find(e.name);
      if (v != t_.mutables.end()) {
        if (s == -2) {
          for (int j = 0; j < t_.k; ++j) add_dense(r, v->second[static_cast<std::size_t>(j)], j);
        } else {
          add_dense(r, v->second[static_cast<std::size_t>(s)], -1);
        }
      }
    }
    fields_.emplace(key, r);
    return r;
  }

  Rel expr(const Expr& e, int pos) {
    switch (e.kind) {
      case ExprKind::SigRef: {
        Rel r = empty(1);
        for (int a : t_.u.sig(e.name).atoms)
          if (t_.present[static_cast<std::size_t>(a)]) r.bits[static_cast<std::size_t>(a)] = 1;
        return r;
      }
      case ExprKind::StateSig: {
        Rel r = empty(1);
        for (int a : t_.u.states().atoms) r.bits[static_cast<std::size_t>(a)] = 1;
        return r;
      }
      case ExprKind::First: {
        Rel r = empty(1);
        r.bits[static_cast<std::size_t>(state(0))] = 1;
        return r;
      }
      case ExprKind::Last: {
        Rel r = empty(1);
        r.bits[static_cast<std::size_t>(state(t_.k - 1))] = 1;
        return r;
      }
      case ExprKind::Next: return next_;
      case ExprKind::FieldRef: return field(e, pos);
      case ExprKind::VarRef: {
        auto it = std::find_if(env_.rbegin(), env_.rend(), [&](const auto& b) { return b.first == e.name; });
        if (it == env_.rend()) throw InternalError("unbound variable '" + e.name + "'");
        Rel r = empty(1);
        r.bits[static_cast<std::size_t>(it->second)] = 1;
        return r;
      }
      case ExprKind::None: return empty(std::max(1, e.arity));
      case ExprKind::Join: {
        auto a = expr(*e.kids[0], pos);
        auto b = expr(*e.kids[1], pos);
        Rel out = empty(a.arity + b.arity - 2);
        std::size_t rest = ipow(n_, b.arity - 1);
        for (std::size_t i = 0; i < a.bits.size(); ++i) {
          if (!a.bits[i]) continue;
          std::size_t prefix = i / n_, last = i % n_;
          for (std::size_t r = 0; r < rest; ++r)
            if (b.bits[last * rest + r]) out.bits[prefix * rest + r] = 1;
        }
        return out;
      }
      case ExprKind::Product: {
        auto a = expr(*e.kids[0], pos);
        auto b = expr(*e.kids[1], pos);
        Rel out = empty(a.arity + b.arity);
        for (std::size_t i = 0; i < a.bits.size(); ++i)
          if (a.bits[i])
            for (std::size_t j = 0; j < b.bits.size(); ++j)
              if (b.bits[j]) out.bits[i * b.bits.size() + j] = 1;
        return out;
      }
      case ExprKind::Union:
      case ExprKind::Inter:
      case ExprKind::Diff: {
        auto a = expr(*e.kids[0], pos);
        auto b = expr(*e.kids[1], pos);
        if (a.arity != b.arity) throw InternalError("arity mismatch: " + to_string(e));
        for (std::size_t i = 0; i < a.bits.size(); ++i) {
          if (e.kind == ExprKind::Union)
            a.bits[i] = a.bits[i] || b.bits[i];
          else if (e.kind == ExprKind::Inter)
            a.bits[i] = a.bits[i] && b.bits[i];
          else
            a.bits[i] = a.bits[i] && !b.bits[i];
        }
        return a;
      }
      case ExprKind::Closure:
      case ExprKind::RClosure: {
        auto r = expr(*e.kids[0], pos);
        for (std::size_t m = 0; m < n_; ++m)
          for (std::size_t i = 0; i < n_; ++i)
            if (r.bits[i * n_ + m])
              for (std::size_t j = 0; j < n_; ++j)
                if (r.bits[m * n_ + j]) r.bits[i * n_ + j] = 1;
        if (e.kind == ExprKind::RClosure)
          for (std::size_t a = 0; a < n_; ++a)
            if (t_.present[a]) r.bits[a * n_ + a] = 1;
        return r;
      }
      case ExprKind::Name:
        throw InternalError("unresolved name '" + e.name + "'");
    }
    throw InternalError("unknown expression kind");
  }

  static bool subset(const Rel& a, const Rel& b) {
    if (a.arity != b.arity) throw InternalError("arity mismatch in inclusion");
    for (std::size_t i = 0; i < a.bits.size(); ++i)
      if (a.bits[i] && !b.bits[i]) return false;
    return true;
  }
  static std::size_t count(const Rel& r) { return static_cast<std::size_t>(std::count(r.bits.begin(), r.bits.end(), 1)); }

  const TraceInstance& t_;
  std::size_t n_;
  Idiom idiom_;
  std::unordered_map<std::string, Rel> fields_;
  Rel next_;
  std::vector<std::pair<std::string, int>> env_;
  std::unordered_map<const Formula*, bool> temporal_;
};

// Multiplicity-respecting values of one relation over the present atoms.
std::vector<TupleSet> valuations(const RelationDecl& rel, const Universe& u, const std::vector<bool>& present,
                                 std::uint64_t cap) {
  std::vector<std::vector<int>> cols;
  for (const auto& c : rel.columns) {
    std::vector<int> atoms;
    for (int a : u.sig(c).atoms)
      if (present[static_cast<std::size_t>(a)]) atoms.push_back(a);
    cols.push_back(std::move(atoms));
  }
  // Group candidate tuples by owner prefix; choose a target subset per prefix.
  std::vector<Tuple> prefixes{{}};
  for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
    std::vector<Tuple> next;
    for (const auto& p : prefixes)
      for (int a : cols[c]) {
        auto q = p;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    prefixes = std::move(next);
  }
  const auto& targets = cols.back();
  if (targets.size() > 24) throw CapExceeded("relation '" + rel.name + "' has too many candidate tuples");
  std::vector<std::uint32_t> choices;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << targets.size()); ++mask) {
    int c = std::popcount(mask);
    bool ok = rel.mult == Mult::Set || (rel.mult == Mult::One && c == 1) || (rel.mult == Mult::Lone && c <= 1) ||
              (rel.mult == Mult::Some && c >= 1);
    if (ok) choices.push_back(mask);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (choices.empty()) return {};
    total *= choices.size();
    if (total > cap) throw CapExceeded("relation '" + rel.name + "' exceeds the enumeration cap");
  }
  std::vector<TupleSet> out;
  std::vector<std::size_t> digit(prefixes.size(), 0);
  for (;;) {
    TupleSet s;
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
      auto mask = choices[digit[p]];
      for (std::size_t t = 0; t < targets.size(); ++t)
        if (mask & (std::uint32_t{1} << t)) {
          auto tup = prefixes[p];
          tup.push_back(targets[t]);
          s.insert(std::move(tup));
        }
    }
    out.push_back(std::move(s));
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == choices.size()) digit[p++] = 0;
    if (p == digit.size()) break;
  }
  return out;
}

struct Slot {
  std::size_t relation;
  int state;  // -1 for immutable relations
};

// Presence vectors: every combination of prefix sizes of non-exact sigs.
std::vector<std::vector<bool>> presence_choices(const Universe& u) {
  std::vector<std::vector<bool>> out{std::vector<bool>(static_cast<std::size_t>(u.size()), true)};
  for (const auto& s : u.sigs) {
    if (s.exact) continue;
    std::vector<std::vector<bool>> next;
    for (const auto& p : out)
      for (std::size_t size = 0; size <= s.atoms.size(); ++size) {
        auto q = p;
        for (std::size_t i = size; i < s.atoms.size(); ++i) q[static_cast<std::size_t>(s.atoms[i])] = false;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

struct Plan {
  Universe u;
  std::vector<RelationDecl> rels;
  std::vector<Slot> slots;
  std::vector<std::optional<int>> loops;
  struct Block {
    std::vector<bool> present;
    std::vector<std::vector<TupleSet>> values;  // per slot
    std::uint64_t count = 0;
  };
  std::vector<Block> blocks;
  std::uint64_t total = 0;
};

Plan make_plan(const Spec& spec, const Scopes& scopes, int k, const EnumerationOptions& opts) {
  Plan plan{build_universe(spec, scopes, k), relation_decls(spec), {}, {}, {}, 0};
  plan.loops = axiomatize_trace(k, opts.embed.finite_traces).loop_choices();
  for (std::size_t r = 0; r < plan.rels.size(); ++r) {
    if (plan.rels[r].mutable_field)
      for (int s = 0; s < k; ++s) plan.slots.push_back({r, s});
    else
      plan.slots.push_back({r, -1});
  }
  for (auto& present : presence_choices(plan.u)) {
    Plan::Block b;
    b.present = std::move(present);
    b.count = plan.loops.size();
    std::vector<TupleSet> cache_rel;
    std::size_t cached = plan.rels.size();
    for (const auto& slot : plan.slots) {
      if (slot.relation != cached) {
        cache_rel = valuations(plan.rels[slot.relation], plan.u, b.present, opts.cap);
        cached = slot.relation;
      }
      b.values.push_back(cache_rel);
      if (cache_rel.empty()) {
        b.count = 0;
      } else if (b.count > 0) {
        if (b.count > opts.cap / cache_rel.size() + 1) throw CapExceeded("candidate instances exceed the cap");
        b.count *= cache_rel.size();
      }
    }
    plan.total += b.count;
    if (plan.total > opts.cap)
      throw CapExceeded("more than " + std::to_string(opts.cap) + " candidate instances");
    plan.blocks.push_back(std::move(b));
  }
  return plan;
}

}  // namespace

bool eval_fo(const FormulaPtr& f, const TraceInstance& t, Idiom idiom) {
  Evaluator ev(t, idiom);
  return ev.holds(*f, -1);
}

bool eval_ltl_lasso(const FormulaPtr& f, const TraceInstance& t, int i) {
  if (i < 0 || i >= t.k) throw std::out_of_range("position outside the trace");
  Evaluator ev(t, Idiom::Local);
  return ev.ltl(*f)[static_cast<std::size_t>(i)];
}

bool respects_multiplicities(const Spec& spec, const TraceInstance& t) {
  for (const auto& rel : relation_decls(spec)) {
    std::vector<const TupleSet*> values;
    if (rel.mutable_field) {
      auto it = t.mutables.find(rel.name);
      if (it == t.mutables.end() || it->second.size() != static_cast<std::size_t>(t.k)) return false;
      for (const auto& v : it->second) values.push_back(&v);
    } else {
      auto it = t.statics.find(rel.name);
      static const TupleSet kEmpty;
      values.push_back(it == t.statics.end() ? &kEmpty : &it->second);
    }
    for (const auto* v : values) {
      std::map<Tuple, int> per_prefix;
      for (const auto& tup : *v) {
        if (tup.size() != rel.columns.size()) return false;
        for (std::size_t c = 0; c < tup.size(); ++c) {
          const auto& atoms = t.u.sig(rel.columns[c]).atoms;
          if (std::find(atoms.begin(), atoms.end(), tup[c]) == atoms.end()) return false;
          if (!t.present[static_cast<std::size_t>(tup[c])]) return false;
        }
        ++per_prefix[Tuple(tup.begin(), tup.end() - 1)];
      }
      if (rel.mult == Mult::Set) continue;
      // every present owner prefix
      std::vector<Tuple> prefixes{{}};
      for (std::size_t c = 0; c + 1 < rel.columns.size(); ++c) {
        std::vector<Tuple> next;
        for (const auto& p : prefixes)
          for (int a : t.u.sig(rel.columns[c]).atoms)
            if (t.present[static_cast<std::size_t>(a)]) {
              auto q = p;
              q.push_back(a);
              next.push_back(std::move(q));
            }
        prefixes = std::move(next);
      }
      for (const auto& p : prefixes) {
        int c = per_prefix.count(p) ? per_prefix[p] : 0;
        if (rel.mult == Mult::One && c != 1) return false;
        if (rel.mult == Mult::Lone && c > 1) return false;
        if (rel.mult == Mult::Some && c < 1) return false;
      }
    }
  }
  return true;
}

std::uint64_t count_candidates(const Spec& resolved, const Scopes& scopes, int k, const EnumerationOptions& opts) {
  return make_plan(resolved, scopes, k, opts).total;
}

void enumerate_traces(const Spec& resolved, const Scopes& scopes, int k, const EnumerationOptions& opts,
                      const std::function<bool(const TraceInstance&)>& visit) {
  Plan plan = make_plan(resolved, scopes, k, opts);
  Embedder emb(resolved, opts.embed);
  std::vector<FormulaPtr> constraints;
  for (const auto& f : resolved.facts) constraints.push_back(emb.translate_positive(f.body));
  if (resolved.trans) constraints.push_back(emb.desugar_trans(resolved.trans));
  FormulaPtr all = mk::conj_all(constraints);

  for (const auto& block : plan.blocks) {
    if (block.count == 0) continue;
    std::vector<std::size_t> digit(plan.slots.size(), 0);
    for (;;) {
      TraceInstance t{plan.u, k, std::nullopt, block.present, {}, {}};
      for (const auto& rel : plan.rels) {
        if (rel.mutable_field)
          t.mutables[rel.name].assign(static_cast<std::size_t>(k), {});
        else
          t.statics[rel.name];
      }
      for (std::size_t s = 0; s < plan.slots.size(); ++s) {
        const auto& slot = plan.slots[s];
        const auto& rel = plan.rels[slot.relation];
        const auto& value = block.values[s][digit[s]];
        if (slot.state < 0)
          t.statics[rel.name] = value;
        else
          t.mutables[rel.name][static_cast<std::size_t>(slot.state)] = value;
      }
      for (const auto& loop : plan.loops) {
        t.loop = loop;
        if (eval_fo(all, t, opts.embed.idiom) && !visit(t)) return;
      }
      std::size_t p = 0;
      while (p < digit.size() && ++digit[p] == block.values[p].size()) digit[p++] = 0;
      if (p == digit.size()) break;
    }
  }
}

std::vector<TraceInstance> enumerate_traces(const Spec& resolved, const Scopes& scopes, int k,
                                            const EnumerationOptions& opts) {
  std::vector<TraceInstance> out;
  enumerate_traces(resolved, scopes, k, opts, [&](const TraceInstance& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::string format_tuples(const TraceInstance& t, const TupleSet& tuples) {
  std::string out = "{";
  bool first = true;
  for (const auto& tup : tuples) {
    if (!first) out += ", ";
    first = false;
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) out += " -> ";
      out += t.u.atom_names[static_cast<std::size_t>(tup[i])];
    }
  }
  return out + "}";
}

std::string trace_summary(const TraceInstance& t) {
  std::string out = "k=" + std::to_string(t.k) + " loop=" + (t.loop ? std::to_string(*t.loop) : "none") + " | atoms:";
  for (int a = 0; a < t.u.size(); ++a)
    if (t.present[static_cast<std::size_t>(a)] && t.u.state_index(a) < 0)
      out += " " + t.u.atom_names[static_cast<std::size_t>(a)];
  for (const auto& [name, tuples] : t.statics) out += " | " + name + " = " + format_tuples(t, tuples);
  for (const auto& [name, states] : t.mutables)
    for (std::size_t s = 0; s < states.size(); ++s)
      out += " | " + name + "@" + std::to_string(s) + " = " + format_tuples(t, states[s]);
  return out;
}

std::string disagreement_record(const std::string& formula, const TraceInstance& t, bool fo, bool ltl) {
  return formula + " | " + trace_summary(t) + " | " + (fo ? "true" : "false") + " | " + (ltl ? "true" : "false");
}

}  // namespace lbmc

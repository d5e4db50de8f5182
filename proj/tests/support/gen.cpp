#include "gen.hpp"

#include <vector>

#include "lassobmc/errors.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/resolve.hpp"
#include "lassobmc/universe.hpp"

namespace gen {

namespace {

using lbmc::Spec;

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct FieldInfo {
  std::string name, owner, target;
  bool square = false;
};

std::vector<FieldInfo> binary_fields(const Spec& s) {
  std::vector<FieldInfo> out;
  for (const auto& sig : s.sigs)
    for (const auto& f : sig.fields)
      if (f.columns.size() == 1) out.push_back({f.name, sig.name, f.columns[0], sig.name == f.columns[0]});
  return out;
}

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const Spec& s, bool primes = false) : rng_(rng), s_(s), fields_(binary_fields(s)), primes_(primes) {}

  std::string formula(int depth, bool temporal) {
    if (depth <= 0 || coin(rng_, 0.2)) return atom();
    int choice = pick(rng_, temporal ? 11 : 6);
    auto sub = [&] { return formula(depth - 1, temporal); };
    switch (choice) {
      case 0: return "not " + sub();
      case 1: return "(" + sub() + " and " + sub() + ")";
      case 2: return "(" + sub() + " or " + sub() + ")";
      case 3: return "(" + sub() + " implies " + sub() + ")";
      case 4:
      case 5: {
        std::string v = "v" + std::to_string(++var_counter_);
        std::string dom = s_.sigs[static_cast<std::size_t>(pick(rng_, static_cast<int>(s_.sigs.size())))].name;
        vars_.push_back(v);
        std::string body = sub();
        vars_.pop_back();
        return std::string("(") + (choice == 4 ? "all " : "some ") + v + " : " + dom + " | " + body + ")";
      }
      case 6: return "X " + sub();
      case 7: return "G " + sub();
      case 8: return "F " + sub();
      case 9: return "(" + sub() + " U " + sub() + ")";
      default: return "(" + sub() + " R " + sub() + ")";
    }
  }

  std::string atom() {
    switch (pick(rng_, 8)) {
      case 0: return "some " + unary(2);
      case 1: return "no " + unary(2);
      case 2: return "lone " + unary(2);
      case 3: return "one " + unary(2);
      case 4: return unary(2) + " in " + unary(2);
      case 5: return unary(1) + " = " + unary(1);
      case 6:
        if (!fields_.empty()) {
          const auto& f = fields_[static_cast<std::size_t>(pick(rng_, static_cast<int>(fields_.size())))];
          return unary(1) + " -> " + unary(1) + " in " + field(f);
        }
        return "some " + unary(1);
      default:
        if (fields_.size() >= 2) {
          const auto& f = fields_[static_cast<std::size_t>(pick(rng_, static_cast<int>(fields_.size())))];
          const auto& g = fields_[static_cast<std::size_t>(pick(rng_, static_cast<int>(fields_.size())))];
          return field(f) + " in " + field(g);
        }
        return "no " + unary(1);
    }
  }

  std::string field(const FieldInfo& f) {
    const lbmc::FieldDecl* d = s_.find_field(f.name);
    if (primes_ && d && d->mutable_field && coin(rng_, 0.5)) return f.name + "'";
    return f.name;
  }

  std::string unary(int depth) {
    int options = depth > 0 ? 8 : 2;
    switch (pick(rng_, options)) {
      case 0:
        if (!vars_.empty()) return vars_[static_cast<std::size_t>(pick(rng_, static_cast<int>(vars_.size())))];
        [[fallthrough]];
      case 1: return s_.sigs[static_cast<std::size_t>(pick(rng_, static_cast<int>(s_.sigs.size())))].name;
      case 2:
      case 3:
        if (!fields_.empty()) {
          const auto& f = fields_[static_cast<std::size_t>(pick(rng_, static_cast<int>(fields_.size())))];
          return unary(depth - 1) + "." + field(f);
        }
        return "none";
      case 4:
        if (!fields_.empty()) {
          const auto& f = fields_[static_cast<std::size_t>(pick(rng_, static_cast<int>(fields_.size())))];
          return field(f) + "." + unary(depth - 1);
        }
        return "none";
      case 5: {
        std::vector<const FieldInfo*> sq;
        for (const auto& f : fields_)
          if (f.square) sq.push_back(&f);
        if (sq.empty()) return unary(depth - 1);
        const auto& f = *sq[static_cast<std::size_t>(pick(rng_, static_cast<int>(sq.size())))];
        return unary(depth - 1) + (coin(rng_) ? ".^" : ".*") + field(f);
      }
      case 6: {
        const char* ops[] = {" + ", " & ", " - "};
        return "(" + unary(depth - 1) + ops[pick(rng_, 3)] + unary(depth - 1) + ")";
      }
      default: return "none";
    }
  }

 private:
  Rng& rng_;
  const Spec& s_;
  std::vector<FieldInfo> fields_;
  bool primes_;
  std::vector<std::string> vars_;
  int var_counter_ = 0;
};

const char* mult_text(int m) {
  switch (m) {
    case 0: return "one ";
    case 1: return "lone ";
    case 2: return "some ";
    default: return "set ";
  }
}

}  // namespace

SpecShape random_spec(Rng& rng) {
  int nsigs = coin(rng, 0.7) ? 2 : 1;
  std::vector<std::string> sigs{"A", "B"};
  sigs.resize(static_cast<std::size_t>(nsigs));
  std::vector<std::vector<std::string>> fields(sigs.size());
  int nfields = 1 + pick(rng, 3);
  bool any_var = false;
  for (int i = 0; i < nfields; ++i) {
    auto owner = static_cast<std::size_t>(pick(rng, nsigs));
    std::string target = sigs[static_cast<std::size_t>(pick(rng, nsigs))];
    bool var = coin(rng, 0.6);
    any_var = any_var || var;
    int m = pick(rng, 6);  // set is the most common
    std::string decl = std::string(var ? "var " : "") + "f" + std::to_string(i + 1) + " : " + mult_text(m) + target;
    fields[owner].push_back(decl);
  }
  std::string text;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    text += "sig " + sigs[i] + " {";
    for (std::size_t j = 0; j < fields[i].size(); ++j) text += (j ? ", " : " ") + fields[i][j];
    text += fields[i].empty() ? "}\n" : " }\n";
  }
  // Names must resolve before facts can be generated over them.
  Spec skeleton = lbmc::resolve(lbmc::parse_spec(text));
  FormulaGen g(rng, skeleton);
  int nfacts = pick(rng, 3);
  for (int i = 0; i < nfacts; ++i)
    text += "fact F" + std::to_string(i) + " { " + g.formula(pick(rng, 2), coin(rng, 0.5)) + " }\n";
  if (any_var && coin(rng, 0.7)) {
    std::vector<std::string> parts;
    for (const auto& sig : skeleton.sigs)
      for (const auto& f : sig.fields) {
        if (!f.mutable_field) continue;
        const std::string& n = f.name;
        const std::string& tgt = f.columns[0];
        std::vector<std::string> options{
            n + "' = " + n,
            "(some t1 : " + sig.name + " | some t2 : " + tgt + " | " + n + "' = " + n + " + t1 -> t2)",
            "(some t1 : " + sig.name + " | " + n + "' = " + n + " - t1 -> " + tgt + ")",
            "no " + n + "'",
        };
        std::string a = options[static_cast<std::size_t>(pick(rng, 4))];
        std::string b = options[static_cast<std::size_t>(pick(rng, 4))];
        parts.push_back(coin(rng) ? "(" + a + " or " + b + ")" : a);
      }
    if (coin(rng, 0.3)) {
      FormulaGen pg(rng, skeleton, true);
      parts.push_back(pg.formula(1, false));
    }
    text += "trans {";
    for (const auto& p : parts) text += " " + p;
    text += " }\n";
  }
  return SpecShape{text, lbmc::resolve(lbmc::parse_spec(text))};
}

std::string random_formula_text(Rng& rng, const Spec& spec, int depth, bool temporal) {
  FormulaGen g(rng, spec);
  return g.formula(depth, temporal);
}

lbmc::FormulaPtr random_formula(Rng& rng, const Spec& spec, int depth, bool temporal) {
  return lbmc::resolve_formula(spec, lbmc::parse_formula(random_formula_text(rng, spec, depth, temporal)));
}

DiffCase random_diff_case(Rng& rng, std::uint64_t max_candidates) {
  for (;;) {
    DiffCase c;
    c.shape = random_spec(rng);
    c.formula_text = random_formula_text(rng, c.shape.spec, 1 + pick(rng, 3));
    c.cmd.kind = coin(rng) ? lbmc::CommandKind::Check : lbmc::CommandKind::Run;
    c.cmd.inline_target = lbmc::resolve_formula(c.shape.spec, lbmc::parse_formula(c.formula_text));
    for (const auto& s : c.shape.spec.sigs) {
      int bound = pick(rng, 4);
      if (bound == 0 && coin(rng, 0.7)) bound = 1;
      c.cmd.scopes[s.name] = lbmc::ScopeBound{bound, coin(rng)};
    }
    c.k = 1 + pick(rng, 4);
    c.opts.idiom = coin(rng, 0.3) ? lbmc::Idiom::Global : lbmc::Idiom::Local;
    c.opts.finite_traces = coin(rng, 0.2);
    lbmc::EnumerationOptions eo{lbmc::EmbedOptions{c.opts.idiom, c.opts.finite_traces}, max_candidates};
    try {
      lbmc::Universe u = lbmc::build_universe(c.shape.spec, c.cmd.scopes, c.k);
      lbmc::check_scopes(c.shape.spec, u);
      if (lbmc::count_candidates(c.shape.spec, c.cmd.scopes, c.k, eo) <= max_candidates) return c;
    } catch (const lbmc::CapExceeded&) {
    } catch (const lbmc::ScopeError&) {
    }
  }
}

lbmc::TraceInstance random_trace(Rng& rng, const Spec& spec, const lbmc::Scopes& scopes, int k, bool lasso) {
  lbmc::TraceInstance t;
  t.u = lbmc::build_universe(spec, scopes, k);
  t.k = k;
  t.present.assign(static_cast<std::size_t>(t.u.size()), true);
  for (const auto& s : t.u.sigs) {
    if (s.exact) continue;
    auto keep = static_cast<std::size_t>(pick(rng, static_cast<int>(s.atoms.size()) + 1));
    for (std::size_t i = keep; i < s.atoms.size(); ++i) t.present[static_cast<std::size_t>(s.atoms[i])] = false;
  }
  if (lasso || coin(rng))
    t.loop = pick(rng, k);
  for (const auto& rel : lbmc::relation_decls(spec)) {
    auto fill = [&](lbmc::TupleSet& out) {
      std::vector<lbmc::Tuple> tuples{{}};
      for (const auto& col : rel.columns) {
        std::vector<lbmc::Tuple> next;
        for (const auto& p : tuples)
          for (int a : t.u.sig(col).atoms)
            if (t.present[static_cast<std::size_t>(a)]) {
              auto q = p;
              q.push_back(a);
              next.push_back(q);
            }
        tuples = std::move(next);
      }
      for (const auto& tup : tuples)
        if (coin(rng, 0.35)) out.insert(tup);
    };
    if (rel.mutable_field) {
      auto& v = t.mutables[rel.name];
      v.assign(static_cast<std::size_t>(k), {});
      for (auto& s : v) fill(s);
    } else {
      fill(t.statics[rel.name]);
    }
  }
  return t;
}

}  // namespace gen

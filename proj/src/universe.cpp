#include "lassobmc/universe.hpp"

#include "lassobmc/errors.hpp"

namespace lbmc {

const SigAtoms& Universe::sig(const std::string& name) const {
  for (const auto& s : sigs)
    if (s.sig == name) return s;
  throw InternalError("universe has no signature '" + name + "'");
}

int Universe::state_index(int atom) const {
  const auto& st = states().atoms;
  if (st.empty() || atom < st.front() || atom > st.back()) return -1;
  return atom - st.front();
}

Universe build_universe(const Spec& spec, const Scopes& scopes, int k) {
  if (k < 1) throw ScopeError("State scope must be at least 1");
  for (const auto& [name, sc] : scopes) {
    if (name == "State") throw ScopeError("the State scope is set through the command bound");
    if (!spec.find_sig(name)) throw ScopeError("scope for unknown signature '" + name + "'");
    if (sc.bound < 0) throw ScopeError("negative scope for '" + name + "'");
  }
  Universe u;
  u.k = k;
  auto add = [&](const std::string& name, int bound, bool exact) {
    SigAtoms sa;
    sa.sig = name;
    sa.exact = exact;
    for (int i = 0; i < bound; ++i) {
      sa.atoms.push_back(u.size());
      u.atom_names.push_back(name + "$" + std::to_string(i));
      u.atom_sig.push_back(static_cast<int>(u.sigs.size()));
    }
    u.sigs.push_back(std::move(sa));
  };
  for (const auto& s : spec.sigs) {
    auto it = scopes.find(s.name);
    if (it == scopes.end())
      add(s.name, kDefaultScope, false);
    else
      add(s.name, it->second.bound, it->second.exact);
  }
  add("State", k, true);
  return u;
}

void check_scopes(const Spec& spec, const Universe& u) {
  for (const auto& s : spec.sigs) {
    const auto& owner = u.sig(s.name);
    if (!owner.exact || owner.atoms.empty()) continue;
    for (const auto& f : s.fields) {
      if (f.mult != Mult::One && f.mult != Mult::Some) continue;
      bool prefix_nonempty = true;
      for (std::size_t c = 0; c + 1 < f.columns.size(); ++c) {
        const auto& mid = u.sig(f.columns[c]);
        prefix_nonempty = prefix_nonempty && mid.exact && !mid.atoms.empty();
      }
      const auto& target = f.columns.back();
      if (prefix_nonempty && u.sig(target).atoms.empty())
        throw ScopeError("field '" + f.name + "' needs at least one " + target + " atom but its scope is 0");
    }
  }
}

std::vector<RelationDecl> relation_decls(const Spec& spec) {
  std::vector<RelationDecl> out;
  for (const auto& s : spec.sigs)
    for (const auto& f : s.fields) {
      RelationDecl r;
      r.name = f.name;
      r.mutable_field = f.mutable_field;
      r.columns.push_back(s.name);
      r.columns.insert(r.columns.end(), f.columns.begin(), f.columns.end());
      r.mult = f.mult;
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace lbmc

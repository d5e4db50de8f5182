#pragma once

#include <map>
#include <string>
#include <vector>

#include "lassobmc/ast.hpp"

namespace lbmc {

using Scopes = std::map<std::string, ScopeBound>;

inline constexpr int kDefaultScope = 3;

/// Atoms of one signature. Atom ids are global across the universe.
struct SigAtoms {
  std::string sig;
  std::vector<int> atoms;
  bool exact = false;
};

/// Finite universe: user signatures in declaration order, then exactly k
/// State atoms. Atom names are `Sig$i`.
struct Universe {
  std::vector<SigAtoms> sigs;
  std::vector<std::string> atom_names;
  std::vector<int> atom_sig;  // index into `sigs`
  int k = 1;

  [[nodiscard]] int size() const { return static_cast<int>(atom_names.size()); }
  [[nodiscard]] const SigAtoms& sig(const std::string& name) const;
  [[nodiscard]] const SigAtoms& states() const { return sigs.back(); }
  [[nodiscard]] int state_atom(int i) const { return states().atoms[static_cast<std::size_t>(i)]; }
  /// State index of an atom, or -1.
  [[nodiscard]] int state_index(int atom) const;
  [[nodiscard]] bool is_exact(int atom) const { return sigs[static_cast<std::size_t>(atom_sig[atom])].exact; }
};

/// Unspecified signatures get kDefaultScope (non-exact). Throws ScopeError
/// on negative bounds, k < 1, or scopes naming unknown signatures.
Universe build_universe(const Spec& spec, const Scopes& scopes, int k);

/// Eager rejection of scopes that make a `one`/`some` field unsatisfiable
/// by construction: an owner signature with an exact positive scope whose
/// target signature has scope 0. Throws ScopeError.
void check_scopes(const Spec& spec, const Universe& u);

/// A declared field as a relation. `columns` includes the owner first and
/// excludes the implicit State column.
struct RelationDecl {
  std::string name;
  bool mutable_field = false;
  std::vector<std::string> columns;
  Mult mult = Mult::Set;
};

std::vector<RelationDecl> relation_decls(const Spec& spec);

}  // namespace lbmc

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lassobmc/cnf.hpp"

namespace lbmc {

/// Circuit literal: 2 * node + sign. Node 0 is the constant false.
using Lit = std::int32_t;
inline constexpr Lit kFalse = 0;
inline constexpr Lit kTrue = 1;

inline Lit lit_not(Lit l) { return l ^ 1; }

/// Hash-consed and-inverter graph with n-ary AND gates and constant folding.
class Circuit {
 public:
  Circuit();

  /// Fresh primary input bound to CNF variable `var`.
  Lit input(int var);

  Lit land(std::vector<Lit> kids);
  Lit lor(std::vector<Lit> kids);
  Lit land(Lit a, Lit b) { return land(std::vector<Lit>{a, b}); }
  Lit lor(Lit a, Lit b) { return lor(std::vector<Lit>{a, b}); }
  Lit implies(Lit a, Lit b) { return lor(lit_not(a), b); }

  [[nodiscard]] bool is_input(Lit l) const { return nodes_[static_cast<std::size_t>(l >> 1)].var != 0; }
  [[nodiscard]] int input_var(Lit l) const { return nodes_[static_cast<std::size_t>(l >> 1)].var; }
  [[nodiscard]] std::size_t gate_count() const;

  /// Value of `l` given CNF-variable values (index = var id).
  [[nodiscard]] bool eval(Lit l, std::span<const bool> var_values) const;

  /// Tseitin translation asserting `root`. Gate auxiliaries are allocated in
  /// `cnf` on first use and reused across calls. Top-level conjunctions are
  /// split and top-level disjunctions become single clauses.
  void assert_into(Lit root, Cnf& cnf);

 private:
  struct Node {
    int var = 0;  // CNF variable for inputs, 0 for gates
    std::vector<Lit> kids;
  };

  int define(Lit l, Cnf& cnf);  // CNF literal equivalent to l

  std::vector<Node> nodes_;
  std::map<std::vector<Lit>, std::int32_t> gates_;
  std::vector<int> tseitin_;  // node -> aux var (0 = not yet defined)
};

}  // namespace lbmc

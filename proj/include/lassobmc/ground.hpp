#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lassobmc/ast.hpp"
#include "lassobmc/circuit.hpp"
#include "lassobmc/cnf.hpp"
#include "lassobmc/embed.hpp"
#include "lassobmc/trace.hpp"
#include "lassobmc/universe.hpp"

namespace lbmc {

/// Dense boolean matrix over universe^arity; cell i holds the circuit
/// literal deciding whether the i-th tuple (row-major atom ids) is present.
struct Matrix {
  int arity = 1;
  std::vector<Lit> cells;
};

/// Bijection between primary CNF variables and what they mean. Variables
/// beyond `entries.size()` are Tseitin auxiliaries.
struct VarMap {
  enum class Kind { Presence, Loop, Fact };
  struct Entry {
    Kind kind = Kind::Fact;
    int atom = -1;        // Presence
    int loop = -1;        // Loop
    int relation = -1;    // Fact: index into relation_decls()
    std::vector<int> tuple;  // Fact: owner-first atoms, no State column
    int state = -1;       // Fact on a mutable relation
  };

  std::vector<Entry> entries;  // entries[v - 1] describes variable v
  std::vector<int> presence;   // atom -> var, 0 when the atom is always present
  std::vector<int> loops;      // loop target -> var

  [[nodiscard]] int num_primary() const { return static_cast<int>(entries.size()); }
  [[nodiscard]] const Entry& at(int var) const { return entries.at(static_cast<std::size_t>(var - 1)); }
  /// 0 when no such variable exists.
  [[nodiscard]] int fact_var(int relation, const std::vector<int>& tuple, int state) const;

  std::unordered_map<std::string, int> fact_index;  // key -> var
  static std::string key(int relation, const std::vector<int>& tuple, int state);
};

/// Iterative-squaring transitive closure of a binary matrix over `n` atoms:
/// ceil(log2 m) rounds of R := R + R.R, m = atoms touched by `r`. When
/// `identity` is non-empty (one literal per atom) the reflexive closure is
/// returned.
Matrix encode_closure(Circuit& c, const Matrix& r, int n, const std::vector<Lit>& identity = {});

/// Relational grounding of first-order formulas into a circuit, plus the
/// structural constraints of the universe and trace.
class Grounder {
 public:
  Grounder(const Spec& spec, const Universe& u, const TraceAxioms& trace, Idiom idiom);

  /// Adds `f` (closed, first-order) as a constraint.
  void assert_formula(const FormulaPtr& f);
  Lit formula(const FormulaPtr& f);
  Matrix expr(const ExprPtr& e);

  /// Multiplicity clauses for every field (also added by the constructor to
  /// the main CNF; exposed for inspection).
  [[nodiscard]] Cnf multiplicity_clauses() const;

  [[nodiscard]] const Cnf& cnf() const { return cnf_; }
  [[nodiscard]] const VarMap& vars() const { return vars_; }
  [[nodiscard]] Circuit& circuit() { return circuit_; }
  [[nodiscard]] const Universe& universe() const { return u_; }
  [[nodiscard]] std::vector<Lit> loop_lits() const { return loop_lits_; }

 private:
  void allocate();
  void structural();
  Lit atom_present(int atom) const;
  std::size_t index(const std::vector<int>& tuple) const;
  Matrix empty(int arity) const;
  Matrix next_closure(bool reflexive) const;
  Matrix join(const Matrix& a, const Matrix& b);
  Matrix product(const Matrix& a, const Matrix& b);
  Lit some(const Matrix& m);
  Lit lone(const Matrix& m);
  Lit subset(const Matrix& a, const Matrix& b);
  bool closed(const Expr& e);

  const Spec& spec_;
  const Universe& u_;
  TraceAxioms trace_;
  Idiom idiom_;
  std::vector<RelationDecl> rels_;
  Circuit circuit_;
  Cnf cnf_;
  VarMap vars_;
  std::vector<Lit> presence_lits_;
  std::vector<Lit> loop_lits_;
  std::vector<Matrix> field_matrix_;  // per relation; mutable ones in idiom layout
  std::vector<std::pair<std::string, int>> env_;
  std::unordered_map<const Expr*, Matrix> cache_;
  std::unordered_map<const Expr*, bool> closed_;
};

struct Grounding {
  Cnf cnf;
  VarMap vars;
};

/// Ground a closed first-order formula with all structural and
/// multiplicity constraints.
Grounding ground(const FormulaPtr& f, const Spec& spec, const Universe& u, const TraceAxioms& trace,
                 Idiom idiom = Idiom::Local);

/// Multiplicity constraints alone, over a fresh variable allocation.
Cnf encode_multiplicities(const Spec& spec, const Universe& u);

}  // namespace lbmc

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lbmc {

struct SrcPos {
  int line = 0;
  int column = 0;
};

struct Expr;
struct Formula;
using ExprPtr = std::shared_ptr<const Expr>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class ExprKind {
  Name,      // unresolved identifier
  SigRef,
  FieldRef,  // see Expr::mutable_field / primed / with_state
  VarRef,
  StateSig,  // trace relations, only produced by the embedding
  First,
  Last,
  Next,
  None,
  Join,
  Union,
  Inter,
  Diff,
  Product,
  Closure,   // ^e
  RClosure,  // *e
};

/// Relational expression node. Trees are immutable once built.
///
/// A FieldRef to a mutable field has two readings. In surface formulas
/// (`with_state == false`) it denotes the field's value at the current state
/// and its arity excludes the State column. After embedding
/// (`with_state == true`) it denotes the whole relation including the State
/// column, placed last (local idiom) or first (global idiom).
struct Expr {
  ExprKind kind = ExprKind::None;
  std::string name;
  bool mutable_field = false;
  bool primed = false;
  bool with_state = false;
  int arity = 0;  // 0 until resolved
  std::vector<ExprPtr> kids;
  SrcPos pos;
};

enum class FormulaKind {
  True,
  False,
  In,
  Eq,
  No,
  Some,
  Lone,
  One,
  Not,
  And,
  Or,
  Implies,
  All,
  Exists,
  Call,
  X,
  Xw,  // weak next, produced by nnf only
  G,
  F,
  U,
  R,
  Infinite,
  Finite,
};

/// Formula node. Quantifiers bind exactly one variable (`var`) ranging over
/// `exprs[0]` with body `subs[0]`. Calls keep the predicate name in `var`
/// and arguments in `exprs`.
struct Formula {
  FormulaKind kind = FormulaKind::True;
  std::vector<FormulaPtr> subs;
  std::vector<ExprPtr> exprs;
  std::string var;
  SrcPos pos;
};

enum class Mult { Set, One, Lone, Some };

struct FieldDecl {
  std::string name;
  bool mutable_field = false;
  std::vector<std::string> columns;  // excludes the owner
  Mult mult = Mult::Set;             // applies to the last column
  SrcPos pos;

  [[nodiscard]] int arity() const { return 1 + static_cast<int>(columns.size()); }
};

struct SigDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  SrcPos pos;
};

struct NamedFormula {
  std::string name;
  FormulaPtr body;
  SrcPos pos;
};

struct Param {
  std::string name;
  ExprPtr domain;
};

struct PredDecl {
  std::string name;
  std::vector<Param> params;
  FormulaPtr body;
  SrcPos pos;
};

struct ScopeBound {
  int bound = 0;
  bool exact = false;

  bool operator==(const ScopeBound&) const = default;
};

enum class CommandKind { Check, Run };

struct Command {
  CommandKind kind = CommandKind::Check;
  std::string target;          // assertion or predicate name
  FormulaPtr inline_target;    // used instead of `target` when set
  std::map<std::string, ScopeBound> scopes;  // State excluded
  int max_state_scope = 0;     // 0 = not given
  SrcPos pos;
};

struct Spec {
  std::vector<SigDecl> sigs;
  std::vector<NamedFormula> facts;
  FormulaPtr trans;
  SrcPos trans_pos;
  std::vector<PredDecl> preds;
  std::vector<NamedFormula> asserts;
  std::vector<Command> cmds;

  bool resolved = false;
  std::vector<std::string> warnings;

  [[nodiscard]] const SigDecl* find_sig(const std::string& name) const;
  [[nodiscard]] const FieldDecl* find_field(const std::string& name) const;
  /// Owner signature of a field, or nullptr.
  [[nodiscard]] const SigDecl* field_owner(const std::string& name) const;
  [[nodiscard]] const PredDecl* find_pred(const std::string& name) const;
  [[nodiscard]] const NamedFormula* find_assert(const std::string& name) const;
  [[nodiscard]] const Command* find_command(const std::string& target) const;
};

// Builders. Arity is filled in where it is locally determined.
namespace mk {

ExprPtr name(std::string id, SrcPos pos = {});
ExprPtr sig(std::string id);
ExprPtr field(std::string id, int arity, bool mutable_field, bool primed = false);
ExprPtr state_field(std::string id, int arity_with_state);
ExprPtr var(std::string id);
ExprPtr state_sig();
ExprPtr first();
ExprPtr last();
ExprPtr next();
ExprPtr none(int arity = 1);
ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr join(ExprPtr lhs, ExprPtr rhs);
ExprPtr closure(ExprPtr e);
ExprPtr rclosure(ExprPtr e);

FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr in(ExprPtr lhs, ExprPtr rhs);
FormulaPtr eq(ExprPtr lhs, ExprPtr rhs);
FormulaPtr card(FormulaKind kind, ExprPtr e);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr quant(FormulaKind kind, std::string var, ExprPtr domain, FormulaPtr body);
FormulaPtr unary(FormulaKind kind, FormulaPtr f);
FormulaPtr binary(FormulaKind kind, FormulaPtr a, FormulaPtr b);
FormulaPtr call(std::string pred, std::vector<ExprPtr> args);
FormulaPtr infinite();
FormulaPtr finite();
/// Conjunction of a list; `True` when empty.
FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);

}  // namespace mk

// Structural queries.
bool is_temporal(FormulaKind kind);
bool is_atom(FormulaKind kind);
bool same_expr(const Expr& a, const Expr& b);
bool same_formula(const Formula& a, const Formula& b);
std::size_t formula_size(const Formula& f);
bool contains_temporal(const Formula& f);
bool contains_prime(const Formula& f);
bool contains_prime(const Expr& e);
/// Free variables of a resolved formula.
std::vector<std::string> free_vars(const Formula& f);

}  // namespace lbmc

#include "lassobmc/printer.hpp"

#include <sstream>

namespace lbmc {

const char* mult_name(Mult m) {
  switch (m) {
    case Mult::Set: return "set";
    case Mult::One: return "one";
    case Mult::Lone: return "lone";
    case Mult::Some: return "some";
  }
  return "set";
}

namespace {

const char* expr_op(ExprKind k) {
  switch (k) {
    case ExprKind::Join: return ".";
    case ExprKind::Union: return " + ";
    case ExprKind::Inter: return " & ";
    case ExprKind::Diff: return " - ";
    case ExprKind::Product: return " -> ";
    default: return "?";
  }
}

const char* card_word(FormulaKind k) {
  switch (k) {
    case FormulaKind::No: return "no";
    case FormulaKind::Some: return "some";
    case FormulaKind::Lone: return "lone";
    case FormulaKind::One: return "one";
    default: return "?";
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Name:
    case ExprKind::SigRef:
    case ExprKind::VarRef:
    case ExprKind::StateSig:
    case ExprKind::First:
    case ExprKind::Last:
    case ExprKind::Next:
      return e.name + (e.primed ? "'" : "");
    case ExprKind::FieldRef:
      return e.name + (e.primed ? "'" : "");
    case ExprKind::None:
      return "none";
    case ExprKind::Closure:
      return "^" + to_string(*e.kids[0]);
    case ExprKind::RClosure:
      return "*" + to_string(*e.kids[0]);
    case ExprKind::Join:
    case ExprKind::Union:
    case ExprKind::Inter:
    case ExprKind::Diff:
    case ExprKind::Product:
      return "(" + to_string(*e.kids[0]) + expr_op(e.kind) + to_string(*e.kids[1]) + ")";
  }
  return "?";
}

std::string to_string(const Formula& f) {
  auto sub = [&](std::size_t i) { return to_string(*f.subs[i]); };
  auto ex = [&](std::size_t i) { return to_string(*f.exprs[i]); };
  switch (f.kind) {
    case FormulaKind::True: return "true";
    case FormulaKind::False: return "false";
    case FormulaKind::In: return ex(0) + " in " + ex(1);
    case FormulaKind::Eq: return ex(0) + " = " + ex(1);
    case FormulaKind::No:
    case FormulaKind::Some:
    case FormulaKind::Lone:
    case FormulaKind::One:
      return std::string(card_word(f.kind)) + " " + ex(0);
    case FormulaKind::Not: return "not (" + sub(0) + ")";
    case FormulaKind::And: return "(" + sub(0) + " and " + sub(1) + ")";
    case FormulaKind::Or: return "(" + sub(0) + " or " + sub(1) + ")";
    case FormulaKind::Implies: return "(" + sub(0) + " implies " + sub(1) + ")";
    case FormulaKind::All:
    case FormulaKind::Exists:
      return std::string("(") + (f.kind == FormulaKind::All ? "all " : "some ") + f.var + " : " + ex(0) + " | " +
             sub(0) + ")";
    case FormulaKind::Call: {
      std::string s = f.var + "[";
      for (std::size_t i = 0; i < f.exprs.size(); ++i) s += (i ? ", " : "") + ex(i);
      return s + "]";
    }
    case FormulaKind::X: return "X (" + sub(0) + ")";
    case FormulaKind::Xw: return "Xw (" + sub(0) + ")";
    case FormulaKind::G: return "G (" + sub(0) + ")";
    case FormulaKind::F: return "F (" + sub(0) + ")";
    case FormulaKind::U: return "(" + sub(0) + " U " + sub(1) + ")";
    case FormulaKind::R: return "(" + sub(0) + " R " + sub(1) + ")";
    case FormulaKind::Infinite: return "infinite";
    case FormulaKind::Finite: return "finite";
  }
  return "?";
}

std::string print_spec(const Spec& spec) {
  std::ostringstream out;
  for (const auto& s : spec.sigs) {
    out << "sig " << s.name << " {";
    for (std::size_t i = 0; i < s.fields.size(); ++i) {
      const auto& f = s.fields[i];
      out << (i ? ", " : " ") << (f.mutable_field ? "var " : "") << f.name << " :";
      for (std::size_t c = 0; c < f.columns.size(); ++c) {
        bool last = c + 1 == f.columns.size();
        out << (c ? " -> " : " ") << (last ? mult_name(f.mult) : "set") << " " << f.columns[c];
      }
    }
    out << (s.fields.empty() ? "}\n" : " }\n");
  }
  for (const auto& f : spec.facts) out << "fact " << (f.name.empty() ? "" : f.name + " ") << "{ " << to_string(*f.body) << " }\n";
  if (spec.trans) out << "trans { " << to_string(*spec.trans) << " }\n";
  for (const auto& p : spec.preds) {
    out << "pred " << p.name << " [";
    for (std::size_t i = 0; i < p.params.size(); ++i)
      out << (i ? ", " : "") << p.params[i].name << " : " << to_string(*p.params[i].domain);
    out << "] { " << to_string(*p.body) << " }\n";
  }
  for (const auto& a : spec.asserts) out << "assert " << a.name << " { " << to_string(*a.body) << " }\n";
  for (const auto& c : spec.cmds) {
    out << (c.kind == CommandKind::Check ? "check " : "run ") << c.target;
    bool any = false;
    for (const auto& [sig, sc] : c.scopes) {
      out << (any ? ", " : " scope ") << (sc.exact ? "exactly " : "") << sc.bound << " " << sig;
      any = true;
    }
    if (c.max_state_scope > 0) out << (any ? ", " : " scope ") << c.max_state_scope << " State";
    out << "\n";
  }
  return out.str();
}

}  // namespace lbmc

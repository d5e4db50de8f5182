#include "lassobmc/alloy.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "lassobmc/errors.hpp"
#include "lassobmc/resolve.hpp"

namespace lbmc {

std::string emit_trace_module() {
  return R"(module trace[exactly elem]

-- util/ordering extended with an optional back loop from the last element,
-- so that a bounded trace can stand for an infinite one.

private one sig Ord {
  First : set elem,
  Next : elem -> elem,
  Back : lone elem
} {
  pred/totalOrder[elem, First, Next]
}

fun first : one elem { Ord.First }

fun last : one elem { elem - Ord.Next.elem }

-- the order plus the back edge, when present
fun next : elem -> elem { Ord.Next + last -> Ord.Back }

pred infinite { some Ord.Back }

pred finite { no Ord.Back }
)";
}

namespace {

// Negations pushed down to atoms over first-order formulas; `infinite` and
// `finite` swap.
FormulaPtr push_not(const FormulaPtr& f, bool negated) {
  using K = FormulaKind;
  switch (f->kind) {
    case K::True: return negated ? mk::falsity() : f;
    case K::False: return negated ? mk::truth() : f;
    case K::Infinite: return negated ? mk::finite() : f;
    case K::Finite: return negated ? mk::infinite() : f;
    case K::Not: return push_not(f->subs[0], !negated);
    case K::And:
    case K::Or: {
      auto a = push_not(f->subs[0], negated);
      auto b = push_not(f->subs[1], negated);
      bool conj = (f->kind == K::And) != negated;
      return conj ? mk::conj(a, b) : mk::disj(a, b);
    }
    case K::Implies: {
      auto a = push_not(f->subs[0], !negated);
      auto b = push_not(f->subs[1], negated);
      return negated ? mk::conj(a, b) : mk::disj(a, b);
    }
    case K::All:
    case K::Exists: {
      bool all = (f->kind == K::All) != negated;
      return mk::quant(all ? K::All : K::Exists, f->var, f->exprs[0], push_not(f->subs[0], negated));
    }
    default:
      if (is_temporal(f->kind) || f->kind == K::Call) throw InternalError("Alloy export expects first-order formulas");
      return negated ? mk::negate(f) : f;
  }
}

int expr_prec(ExprKind k) {
  switch (k) {
    case ExprKind::Union:
    case ExprKind::Diff: return 1;
    case ExprKind::Inter: return 2;
    case ExprKind::Product: return 3;
    case ExprKind::Join: return 4;
    case ExprKind::Closure:
    case ExprKind::RClosure: return 5;
    default: return 6;
  }
}

std::string expr_text(const Expr& e);

std::string operand(const Expr& e, int parent, bool right, ExprKind parent_kind) {
  int p = expr_prec(e.kind);
  bool paren = p < parent;
  // a.(s.f) keeps its parentheses: (a.s).f is an ill-typed empty join in Alloy
  if (right && parent_kind == ExprKind::Join && e.kind == ExprKind::Join && e.kids[0]->kind != ExprKind::FieldRef)
    paren = true;
  if (right && p == parent && parent_kind != ExprKind::Join && parent_kind != ExprKind::Product &&
      !(parent_kind == ExprKind::Union && e.kind == ExprKind::Union) &&
      !(parent_kind == ExprKind::Inter && e.kind == ExprKind::Inter))
    paren = true;
  std::string s = expr_text(e);
  return paren ? "(" + s + ")" : s;
}

std::string expr_text(const Expr& e) {
  switch (e.kind) {
    case ExprKind::SigRef:
    case ExprKind::FieldRef:
    case ExprKind::VarRef:
    case ExprKind::Name: return e.name;
    case ExprKind::StateSig: return "State";
    case ExprKind::First: return "first";
    case ExprKind::Last: return "last";
    case ExprKind::Next: return "next";
    case ExprKind::None: {
      std::string s = "none";
      for (int i = 1; i < e.arity; ++i) s += " -> none";
      return e.arity > 1 ? "(" + s + ")" : s;
    }
    case ExprKind::Closure: return "^" + operand(*e.kids[0], 5, false, e.kind);
    case ExprKind::RClosure: return "*" + operand(*e.kids[0], 5, false, e.kind);
    default: break;
  }
  const char* op = e.kind == ExprKind::Join      ? "."
                   : e.kind == ExprKind::Union   ? " + "
                   : e.kind == ExprKind::Inter   ? " & "
                   : e.kind == ExprKind::Diff    ? " - "
                                                 : " -> ";
  int p = expr_prec(e.kind);
  return operand(*e.kids[0], p, false, e.kind) + op + operand(*e.kids[1], p, true, e.kind);
}

bool compound(const Formula& f) {
  using K = FormulaKind;
  return f.kind == K::And || f.kind == K::Or || f.kind == K::Implies || f.kind == K::All || f.kind == K::Exists;
}

std::string formula_text(const Formula& f);

void disjuncts(const Formula& f, std::vector<const Formula*>& out) {
  if (f.kind == FormulaKind::Or) {
    disjuncts(*f.subs[0], out);
    disjuncts(*f.subs[1], out);
  } else {
    out.push_back(&f);
  }
}

// A disjunction with negated disjuncts reads as an implication.
bool implication_shaped(const Formula& f) {
  if (f.kind != FormulaKind::Or) return false;
  std::vector<const Formula*> ds;
  disjuncts(f, ds);
  bool neg = false, pos = false;
  for (const auto* d : ds) (d->kind == FormulaKind::Not ? neg : pos) = true;
  return neg && pos;
}

// Child of a binary connective: parenthesized unless it is an atom or the
// same associative connective.
std::string child(const Formula& c, FormulaKind parent) {
  std::string s = formula_text(c);
  bool same = c.kind == parent && (parent == FormulaKind::And || parent == FormulaKind::Or);
  if (compound(c) && (!same || implication_shaped(c))) return "(" + s + ")";
  return s;
}

std::string formula_text(const Formula& f) {
  using K = FormulaKind;
  switch (f.kind) {
    case K::True: return "(some univ or no univ)";
    case K::False: return "(some univ and no univ)";
    case K::In: return expr_text(*f.exprs[0]) + " in " + expr_text(*f.exprs[1]);
    case K::Eq: return expr_text(*f.exprs[0]) + " = " + expr_text(*f.exprs[1]);
    case K::No: return "no " + expr_text(*f.exprs[0]);
    case K::Some: return "some " + expr_text(*f.exprs[0]);
    case K::Lone: return "lone " + expr_text(*f.exprs[0]);
    case K::One: return "one " + expr_text(*f.exprs[0]);
    case K::Infinite: return "infinite";
    case K::Finite: return "finite";
    case K::Not: {
      const Formula& c = *f.subs[0];
      std::string s = formula_text(c);
      return compound(c) ? "not (" + s + ")" : "not " + s;
    }
    case K::And: return child(*f.subs[0], K::And) + " and " + child(*f.subs[1], K::And);
    case K::Or: {
      if (!implication_shaped(f)) return child(*f.subs[0], K::Or) + " or " + child(*f.subs[1], K::Or);
      std::vector<const Formula*> ds, ante, cons;
      disjuncts(f, ds);
      for (const auto* d : ds) (d->kind == K::Not ? ante : cons).push_back(d);
      std::string out;
      for (std::size_t i = 0; i < ante.size(); ++i)
        out += (i ? " and " : "") + child(*ante[i]->subs[0], ante.size() > 1 ? K::And : K::Implies);
      out += " implies ";
      if (cons.size() == 1) return out + child(*cons[0], K::Implies);
      std::string rest;
      for (std::size_t i = 0; i < cons.size(); ++i) rest += (i ? " or " : "") + child(*cons[i], K::Or);
      return out + "(" + rest + ")";
    }
    case K::Implies: return child(*f.subs[0], K::Implies) + " implies " + child(*f.subs[1], K::Implies);
    case K::All:
    case K::Exists:
      return std::string(f.kind == K::All ? "all " : "some ") + f.var + " : " + expr_text(*f.exprs[0]) + " | " +
             formula_text(*f.subs[0]);
    default:
      throw InternalError("Alloy export expects first-order formulas");
  }
}

void conjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == FormulaKind::And) {
    conjuncts(f->subs[0], out);
    conjuncts(f->subs[1], out);
  } else if (f->kind != FormulaKind::True) {
    out.push_back(f);
  }
}

std::string block(const FormulaPtr& f) {
  std::vector<FormulaPtr> parts;
  conjuncts(f, parts);
  std::string out = "{\n";
  for (const auto& p : parts) out += "  " + formula_text(*p) + "\n";
  return out + "}\n";
}

const char* mult_keyword(Mult m) {
  return m == Mult::One ? "one" : m == Mult::Lone ? "lone" : m == Mult::Some ? "some" : "set";
}

std::string field_type(const FieldDecl& fd, const AlloyOptions& opts) {
  const char* mult = mult_keyword(fd.mult);
  std::string s;
  for (std::size_t i = 0; i + 1 < fd.columns.size(); ++i) s += fd.columns[i] + " -> ";
  if (fd.mutable_field && opts.idiom == Idiom::Local) {
    s += fd.columns.back();
    if (fd.mult != Mult::Set) s += std::string(" ") + mult;
    return s + " -> State";
  }
  if (fd.columns.size() == 1) return std::string(mult) + " " + fd.columns.back();
  if (fd.mult == Mult::Set) return s + fd.columns.back();
  return s + mult + " " + fd.columns.back();
}

std::string sig_text(const std::string& name, const std::vector<std::string>& fields) {
  if (fields.empty()) return "sig " + name + " {}\n";
  std::string out = "sig " + name + " {\n";
  for (std::size_t i = 0; i < fields.size(); ++i) out += "  " + fields[i] + (i + 1 < fields.size() ? ",\n" : "\n");
  return out + "}\n";
}

std::string scope_text(const Spec& spec, const Command& cmd, const AlloyOptions& opts) {
  std::string out = " for ";
  for (const auto& s : spec.sigs) {
    auto it = cmd.scopes.find(s.name);
    if (it == cmd.scopes.end()) continue;
    out += (it->second.exact ? "exactly " : "") + std::to_string(it->second.bound) + " " + s.name + ", ";
  }
  int k = cmd.max_state_scope > 0 ? cmd.max_state_scope : opts.default_state_scope;
  return out + "exactly " + std::to_string(k) + " State";
}

}  // namespace

std::string emit_alloy_spec(const Spec& resolved, const std::string& module_name, const AlloyOptions& opts) {
  Embedder emb(resolved, EmbedOptions{opts.idiom, false});
  std::string out = "module " + module_name + "\n\nopen trace[State]\n\n";
  std::vector<std::string> state_fields;
  std::string sigs;
  for (const auto& s : resolved.sigs) {
    std::vector<std::string> fields;
    for (const auto& fd : s.fields) {
      if (fd.mutable_field && opts.idiom == Idiom::Global) {
        // State first, then the owner
        std::string t = fd.name + " : " + s.name + " -> ";
        for (std::size_t i = 0; i + 1 < fd.columns.size(); ++i) t += fd.columns[i] + " -> ";
        if (fd.mult != Mult::Set) t += std::string(mult_keyword(fd.mult)) + " ";
        state_fields.push_back(t + fd.columns.back());
      } else {
        fields.push_back(fd.name + " : " + field_type(fd, opts));
      }
    }
    sigs += sig_text(s.name, fields);
  }
  out += sig_text("State", state_fields) + "\n" + sigs;

  for (const auto& f : resolved.facts) {
    out += "\nfact " + (f.name.empty() ? std::string() : f.name + " ") + block(emb.translate_positive(f.body));
  }
  if (resolved.trans) out += "\nfact " + block(emb.desugar_trans(resolved.trans));
  for (const auto& a : resolved.asserts)
    out += "\nassert " + a.name + " " + block(push_not(emb.translate_check(a.body), false));
  if (!resolved.cmds.empty()) out += "\n";
  for (const auto& c : resolved.cmds) {
    if (c.kind == CommandKind::Check && !c.inline_target && resolved.find_assert(c.target)) {
      out += "check " + c.target + scope_text(resolved, c, opts) + "\n";
    } else if (c.kind == CommandKind::Check) {
      auto body = push_not(emb.translate_check(command_target(resolved, c)), false);
      out += "check " + block(body).substr(0, block(body).size() - 1) + scope_text(resolved, c, opts) + "\n";
    } else {
      auto body = push_not(emb.translate_positive(command_target(resolved, c)), false);
      std::string b = block(body);
      out += "run " + b.substr(0, b.size() - 1) + scope_text(resolved, c, opts) + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alloy syntax validator

namespace {

struct Tok {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

const std::set<std::string> kKeywords = {
    "module", "open",   "as",    "sig",    "extends", "in",      "abstract", "one",  "lone", "some",
    "no",     "all",    "set",   "fun",    "pred",    "fact",    "assert",   "check", "run", "for",
    "but",    "exactly", "not",  "and",    "or",      "implies", "iff",      "else", "let", "disj",
    "private", "univ",  "none",  "iden",   "this",    "expect",  "sum",      "var"};

std::vector<Tok> lex_alloy(std::string_view s, std::vector<std::string>& errs) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t j = 0; j < n && i < s.size(); ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static const char* syms[] = {"<=>", "!in", "=>", "->", "<:", ":>", "++", "&&", "||", "!=", "=<", ">=",
                               "{",   "}",   "[",  "]",  "(",  ")",  ",",  ":",  "|",  ".",  "+",  "-",
                               "&",   "^",   "*",  "~",  "=",  "!",  "#",  "<",  ">",  "@",  "/"};
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (s.substr(i, 2) == "--" || s.substr(i, 2) == "//") {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    if (s.substr(i, 2) == "/*") {
      std::size_t end = s.find("*/", i + 2);
      if (end == std::string_view::npos) {
        errs.push_back(std::to_string(line) + ":" + std::to_string(col) + ": unterminated comment");
        return out;
      }
      adv(end + 2 - i);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'' || s[j] == '"'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      adv(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
      adv(j - i);
      out.push_back(t);
      continue;
    }
    bool found = false;
    for (const char* sym : syms) {
      std::string_view sv(sym);
      if (s.substr(i, sv.size()) == sv) {
        t.kind = Tok::Sym;
        t.text = std::string(sv);
        adv(sv.size());
        out.push_back(t);
        found = true;
        break;
      }
    }
    if (!found) {
      errs.push_back(std::to_string(line) + ":" + std::to_string(col) + ": unexpected character '" + std::string(1, c) + "'");
      adv(1);
    }
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct AlloyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class AlloyParser {
 public:
  explicit AlloyParser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  void spec() {
    if (is("module")) {
      next();
      qname();
      if (accept("[")) {
        do {
          accept("exactly");
          name();
        } while (accept(","));
        expect("]");
      }
    }
    while (is("open") || (is("private") && peek(1).text == "open")) {
      accept("private");
      next();
      qname();
      if (accept("[")) {
        do qname();
        while (accept(","));
        expect("]");
      }
      if (accept("as")) name();
    }
    while (t_[p_].kind != Tok::End) paragraph();
  }

 private:
  const Tok& cur() const { return t_[p_]; }
  const Tok& peek(std::size_t n) const { return t_[std::min(p_ + n, t_.size() - 1)]; }
  bool is(const std::string& s) const { return cur().kind != Tok::End && cur().kind != Tok::Number && cur().text == s; }
  void next() {
    if (p_ + 1 < t_.size()) ++p_;
  }
  bool accept(const std::string& s) {
    if (!is(s)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string found = cur().kind == Tok::End ? "end of input" : "'" + cur().text + "'";
    throw AlloyError(std::to_string(cur().line) + ":" + std::to_string(cur().col) + ": expected " + what + ", found " +
                     found);
  }
  void expect(const std::string& s) {
    if (!accept(s)) fail("'" + s + "'");
  }
  bool is_name() const { return cur().kind == Tok::Ident && !kKeywords.count(cur().text); }
  void name() {
    if (!is_name()) fail("a name");
    next();
  }
  void qname() {
    if (accept("this") || accept("pred")) {
      expect("/");
    }
    name();
    while (is("/") && peek(1).kind == Tok::Ident) {
      next();
      name();
    }
  }

  void paragraph() {
    std::set<std::string> quals{"private", "abstract", "one", "lone", "some"};
    if (is("sig") || (quals.count(cur().text) && cur().kind == Tok::Ident)) {
      std::size_t q = p_;
      while (quals.count(t_[q].text) && t_[q].kind == Tok::Ident) ++q;
      if (t_[q].text == "sig") {
        p_ = q;
        sig_decl();
        return;
      }
    }
    if (accept("fact")) {
      if (is_name()) name();
      block();
      return;
    }
    if (accept("assert")) {
      if (is_name()) name();
      block();
      return;
    }
    accept("private");
    if (accept("pred")) {
      name();
      params();
      block();
      return;
    }
    if (accept("fun")) {
      name();
      params();
      expect(":");
      expr();
      block();
      return;
    }
    if (is_name() && peek(1).text == ":") {
      name();
      next();
    }
    if (accept("run") || accept("check")) {
      if (is("{"))
        block();
      else
        qname();
      if (accept("for")) {
        bool typescope = cur().kind == Tok::Number && peek(1).kind == Tok::Ident && !kKeywords.count(peek(1).text);
        if (cur().kind == Tok::Number && !typescope && !is_exactly_ahead()) {
          next();
          if (accept("but")) typescopes();
        } else {
          typescopes();
        }
      }
      if (accept("expect")) {
        if (cur().kind != Tok::Number) fail("a number");
        next();
      }
      return;
    }
    fail("a paragraph");
  }

  bool is_exactly_ahead() const { return is("exactly"); }

  void typescopes() {
    do {
      accept("exactly");
      if (cur().kind != Tok::Number) fail("a scope number");
      next();
      qname();
    } while (accept(","));
  }

  void sig_decl() {
    expect("sig");
    do name();
    while (accept(","));
    if (accept("extends")) {
      qname();
    } else if (accept("in")) {
      qname();
      while (accept("+")) qname();
    }
    expect("{");
    if (!is("}")) {
      do decl();
      while (accept(","));
    }
    expect("}");
    if (is("{")) block();
  }

  void decl() {
    accept("private");
    accept("disj");
    accept("var");
    do name();
    while (accept(","));
    expect(":");
    accept("disj");
    or_expr();  // a bound, never a quantified formula
  }

  void params() {
    if (accept("[")) {
      if (!is("]")) {
        do decl();
        while (accept(","));
      }
      expect("]");
    } else if (accept("(")) {
      if (!is(")")) {
        do decl();
        while (accept(","));
      }
      expect(")");
    }
  }

  void block() {
    expect("{");
    while (!is("}")) {
      if (cur().kind == Tok::End) fail("'}'");
      expr();
    }
    expect("}");
  }

  bool quantifier_ahead() const {
    static const std::set<std::string> q{"all", "some", "no", "lone", "one", "sum"};
    if (!(cur().kind == Tok::Ident && q.count(cur().text))) return false;
    std::size_t i = p_ + 1;
    if (t_[i].text == "disj") ++i;
    for (;;) {
      if (t_[i].kind != Tok::Ident || kKeywords.count(t_[i].text)) return false;
      ++i;
      if (t_[i].text == ":") return true;
      if (t_[i].text != ",") return false;
      ++i;
    }
  }

  void expr() {
    if (quantifier_ahead()) {
      next();
      do decl();
      while (accept(","));
      if (is("{"))
        block();
      else {
        expect("|");
        expr();
      }
      return;
    }
    if (accept("let")) {
      do {
        name();
        expect("=");
        expr();
      } while (accept(","));
      if (is("{"))
        block();
      else {
        expect("|");
        expr();
      }
      return;
    }
    or_expr();
  }

  // Operands may themselves be quantified formulas extending to the right.
  void operand_or_quant(void (AlloyParser::*f)()) {
    if (quantifier_ahead() || is("let"))
      expr();
    else
      (this->*f)();
  }

  void or_expr() {
    iff_expr();
    while (accept("or") || accept("||")) operand_or_quant(&AlloyParser::iff_expr);
  }
  void iff_expr() {
    implies_expr();
    while (accept("iff") || accept("<=>")) operand_or_quant(&AlloyParser::implies_expr);
  }
  void implies_expr() {
    and_expr();
    if (accept("implies") || accept("=>")) {
      operand_or_quant(&AlloyParser::implies_expr);
      if (accept("else")) operand_or_quant(&AlloyParser::implies_expr);
    }
  }
  void and_expr() {
    not_expr();
    while (accept("and") || accept("&&")) operand_or_quant(&AlloyParser::not_expr);
  }
  void not_expr() {
    if (accept("not") || accept("!")) {
      operand_or_quant(&AlloyParser::not_expr);
      return;
    }
    compare_expr();
  }
  void compare_expr() {
    static const std::set<std::string> cmp{"in", "=", "<", ">", "=<", ">="};
    mult_expr();
    if ((is("not") || is("!")) && cmp.count(peek(1).text)) next();
    if (accept("in") || accept("=") || accept("<") || accept(">") || accept("=<") || accept(">=") || accept("!in") ||
        accept("!="))
      mult_expr();
  }
  void mult_expr() {
    if (accept("no") || accept("some") || accept("lone") || accept("one") || accept("set")) {
      union_expr();
      return;
    }
    union_expr();
  }
  void union_expr() {
    card_expr();
    while (accept("+") || accept("-")) card_expr();
  }
  void card_expr() {
    if (accept("#")) {
      card_expr();
      return;
    }
    override_expr();
  }
  void override_expr() {
    inter_expr();
    while (accept("++")) inter_expr();
  }
  void inter_expr() {
    arrow_expr();
    while (accept("&")) arrow_expr();
  }
  bool arrow_mult() {
    static const std::set<std::string> m{"one", "lone", "some", "set"};
    if (cur().kind == Tok::Ident && m.count(cur().text)) {
      next();
      return true;
    }
    return false;
  }
  void arrow_expr() {
    restrict_expr();
    for (;;) {
      std::size_t save = p_;
      arrow_mult();
      if (!accept("->")) {
        p_ = save;
        return;
      }
      arrow_mult();
      restrict_expr();
    }
  }
  void restrict_expr() {
    join_expr();
    while (accept("<:") || accept(":>")) join_expr();
  }
  void join_expr() {
    unary_expr();
    for (;;) {
      if (accept(".")) {
        unary_expr();
      } else if (is("[")) {
        next();
        if (!is("]")) {
          do expr();
          while (accept(","));
        }
        expect("]");
      } else {
        return;
      }
    }
  }
  void unary_expr() {
    if (accept("~") || accept("^") || accept("*")) {
      unary_expr();
      return;
    }
    primary();
  }
  void primary() {
    if (accept("(")) {
      expr();
      expect(")");
      return;
    }
    if (is("{")) {
      // comprehension or block
      std::size_t save = p_;
      next();
      if (is_name() && (peek(1).text == ":" || peek(1).text == ",")) {
        do decl();
        while (accept(","));
        if (accept("|")) {
          expr();
          expect("}");
          return;
        }
      }
      p_ = save;
      block();
      return;
    }
    if (cur().kind == Tok::Number) {
      next();
      return;
    }
    if (accept("none") || accept("univ") || accept("iden")) return;
    if (accept("@")) {
      name();
      return;
    }
    if (is("this") || is_name() || (is("pred") && peek(1).text == "/")) {
      qname();
      return;
    }
    fail("an expression");
  }

  std::vector<Tok> t_;
  std::size_t p_ = 0;
};

}  // namespace

std::vector<std::string> validate_alloy(std::string_view text) {
  std::vector<std::string> errs;
  auto toks = lex_alloy(text, errs);
  if (!errs.empty()) return errs;
  try {
    AlloyParser p(std::move(toks));
    p.spec();
  } catch (const AlloyError& e) {
    errs.push_back(e.what());
  }
  return errs;
}

}  // namespace lbmc

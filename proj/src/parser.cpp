#include "lassobmc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "lassobmc/errors.hpp"

namespace lbmc {

namespace {

enum class Tok {
  Id,
  Int,
  Sym,  // punctuation, text in Token::text
  Kw,   // keyword, text in Token::text
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SrcPos pos;
};

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "sig", "fact", "trans", "pred", "assert", "check", "run", "scope", "exactly", "var",
      "set", "one", "lone", "some", "no", "not", "and", "or", "implies", "all",
      "in", "none", "X", "G", "F", "U", "R", "true", "false",
  };
  return kw;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if ((c == '-' && i + 1 < src.size() && src[i + 1] == '-') ||
        (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = keywords().count(t.text) ? Tok::Kw : Tok::Id;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = Tok::Int;
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::Sym;
      t.text = "->";
      advance(2);
    } else if (std::string_view("{}[](),:|.&+-*^'=").find(c) != std::string_view::npos) {
      t.kind = Tok::Sym;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", t.pos, {});
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.text = "end of input";
  end.pos = {line, col};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Spec spec() {
    Spec s;
    while (!at_end()) decl(s);
    return s;
  }

  FormulaPtr lone_formula() {
    auto f = formula();
    if (!at_end()) fail();
    return f;
  }

 private:
  // ---- token plumbing -------------------------------------------------
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }

  bool is(const char* text, std::size_t ahead = 0) {
    if (ahead == 0) expected_.insert(std::string("'") + text + "'");
    const Token& t = peek(ahead);
    return (t.kind == Tok::Sym || t.kind == Tok::Kw) && t.text == text;
  }
  bool is_id(std::size_t ahead = 0) {
    if (ahead == 0) expected_.insert("identifier");
    return peek(ahead).kind == Tok::Id;
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    expected_.clear();
    return t;
  }

  bool accept(const char* text) {
    if (is(text)) {
      take();
      return true;
    }
    return false;
  }

  SrcPos expect(const char* text) {
    if (!is(text)) fail();
    return take().pos;
  }

  Token expect_id() {
    if (!is_id()) fail();
    return take();
  }

  int expect_int() {
    expected_.insert("integer");
    if (peek().kind != Tok::Int) fail();
    return std::stoi(take().text);
  }

  [[noreturn]] void fail() {
    std::vector<std::string> exp(expected_.begin(), expected_.end());
    std::string msg = "unexpected '" + peek().text + "'";
    if (!exp.empty()) {
      msg += "; expected one of:";
      for (const auto& e : exp) msg += " " + e;
    }
    throw ParseError(msg, peek().pos, exp);
  }

  // ---- declarations ---------------------------------------------------
  void decl(Spec& s) {
    SrcPos at = peek().pos;
    if (accept("sig")) {
      SigDecl sig;
      sig.pos = at;
      sig.name = expect_id().text;
      expect("{");
      if (!is("}")) {
        do {
          field_group(sig.fields);
        } while (accept(","));
      }
      expect("}");
      s.sigs.push_back(std::move(sig));
    } else if (accept("fact")) {
      NamedFormula f;
      f.pos = at;
      if (!is("{")) f.name = expect_id().text;
      f.body = block();
      s.facts.push_back(std::move(f));
    } else if (accept("trans")) {
      if (s.trans) throw ParseError("duplicate trans block", at, {});
      s.trans = block();
      s.trans_pos = at;
    } else if (accept("pred")) {
      PredDecl p;
      p.pos = at;
      p.name = expect_id().text;
      if (accept("[")) {
        if (!is("]")) {
          do {
            std::vector<std::string> names{expect_id().text};
            while (accept(",")) names.push_back(expect_id().text);
            expect(":");
            auto dom = expr();
            for (auto& n : names) p.params.push_back({n, dom});
          } while (accept(","));
        }
        expect("]");
      }
      p.body = block();
      s.preds.push_back(std::move(p));
    } else if (accept("assert")) {
      NamedFormula a;
      a.pos = at;
      a.name = expect_id().text;
      a.body = block();
      s.asserts.push_back(std::move(a));
    } else if (is("check") || is("run")) {
      Command c;
      c.pos = at;
      c.kind = take().text == "check" ? CommandKind::Check : CommandKind::Run;
      c.target = expect_id().text;
      if (accept("scope")) {
        do {
          bool exact = accept("exactly");
          int bound = expect_int();
          auto sig = expect_id();
          if (bound < 0) throw ParseError("negative scope", sig.pos, {});
          if (sig.text == "State") {
            c.max_state_scope = bound;
          } else {
            if (c.scopes.count(sig.text)) throw ParseError("duplicate scope for " + sig.text, sig.pos, {});
            c.scopes[sig.text] = {bound, exact};
          }
        } while (accept(","));
      }
      s.cmds.push_back(std::move(c));
    } else {
      fail();
    }
  }

  // `a, b : one X` declares several fields sharing a type.
  void field_group(std::vector<FieldDecl>& out) {
    bool is_var = accept("var");
    std::vector<Token> names{expect_id()};
    while (is(",") && is_id(1) && (is(",", 2) || is(":", 2))) {
      take();
      names.push_back(expect_id());
    }
    expect(":");
    std::vector<std::string> cols;
    Mult last = Mult::Set;
    for (;;) {
      SrcPos mpos = peek().pos;
      Mult m = mult();
      cols.push_back(expect_id().text);
      if (!accept("->")) {
        last = m;
        break;
      }
      if (m != Mult::Set) throw ParseError("multiplicity on a middle column is not supported", mpos, {});
    }
    for (const auto& n : names) {
      FieldDecl f;
      f.name = n.text;
      f.pos = n.pos;
      f.mutable_field = is_var;
      f.columns = cols;
      f.mult = last;
      out.push_back(std::move(f));
    }
  }

  Mult mult() {
    if (accept("set")) return Mult::Set;
    if (accept("one")) return Mult::One;
    if (accept("lone")) return Mult::Lone;
    if (accept("some")) return Mult::Some;
    return Mult::Set;
  }

  // `{ f1 f2 ... }` is the conjunction of its formulas.
  FormulaPtr block() {
    SrcPos at = expect("{");
    std::vector<FormulaPtr> parts;
    while (!is("}")) parts.push_back(formula());
    take();
    if (parts.empty()) {
      auto t = std::make_shared<Formula>();
      t->kind = FormulaKind::True;
      t->pos = at;
      return t;
    }
    FormulaPtr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = with_pos(mk::conj(acc, parts[i]), parts[i]->pos);
    return acc;
  }

  // ---- formulas -------------------------------------------------------
  static FormulaPtr with_pos(FormulaPtr f, SrcPos pos) {
    auto copy = std::make_shared<Formula>(*f);
    copy->pos = pos;
    return copy;
  }
  static ExprPtr with_pos(ExprPtr e, SrcPos pos) {
    auto copy = std::make_shared<Expr>(*e);
    copy->pos = pos;
    return copy;
  }

  FormulaPtr formula() { return implication(); }

  FormulaPtr implication() {
    auto lhs = disjunction();
    SrcPos at = peek().pos;
    if (accept("implies")) return with_pos(mk::implies(lhs, implication()), at);
    return lhs;
  }

  FormulaPtr disjunction() {
    auto lhs = conjunction();
    for (;;) {
      SrcPos at = peek().pos;
      if (!accept("or")) return lhs;
      lhs = with_pos(mk::disj(lhs, conjunction()), at);
    }
  }

  FormulaPtr conjunction() {
    auto lhs = unary();
    for (;;) {
      SrcPos at = peek().pos;
      if (!accept("and")) return lhs;
      lhs = with_pos(mk::conj(lhs, unary()), at);
    }
  }

  bool quantifier_ahead() {
    // ("all"|"some") ID (":"|",")
    return (is("all") || is("some")) && is_id(1) && (is(":", 2) || is(",", 2));
  }

  FormulaPtr unary() {
    SrcPos at = peek().pos;
    if (quantifier_ahead()) return quantified();
    if (accept("not")) return with_pos(mk::negate(unary()), at);
    if (accept("X")) return with_pos(mk::unary(FormulaKind::X, unary()), at);
    if (accept("G")) return with_pos(mk::unary(FormulaKind::G, unary()), at);
    if (accept("F")) return with_pos(mk::unary(FormulaKind::F, unary()), at);
    return primary();
  }

  // all a, b : A, c : C | body  ==> nested single-variable quantifiers
  FormulaPtr quantified() {
    SrcPos at = peek().pos;
    FormulaKind kind = take().text == "all" ? FormulaKind::All : FormulaKind::Exists;
    std::vector<std::pair<std::string, ExprPtr>> binds;
    do {
      std::vector<std::string> names{expect_id().text};
      while (accept(",")) names.push_back(expect_id().text);
      expect(":");
      auto dom = expr();
      for (auto& n : names) binds.emplace_back(n, dom);
    } while (accept(","));
    expect("|");
    FormulaPtr body = formula();
    for (auto it = binds.rbegin(); it != binds.rend(); ++it)
      body = with_pos(mk::quant(kind, it->first, it->second, body), at);
    return body;
  }

  FormulaPtr primary() {
    SrcPos at = peek().pos;
    if (accept("true")) return with_pos(mk::truth(), at);
    if (accept("false")) return with_pos(mk::falsity(), at);
    for (auto [text, kind] : {std::pair{"no", FormulaKind::No}, std::pair{"some", FormulaKind::Some},
                              std::pair{"lone", FormulaKind::Lone}, std::pair{"one", FormulaKind::One}}) {
      if (accept(text)) return with_pos(mk::card(kind, expr()), at);
    }
    if (is_id() && is("[", 1)) {
      std::string name = take().text;
      take();
      std::vector<ExprPtr> args;
      if (!is("]")) {
        do {
          args.push_back(expr());
        } while (accept(","));
      }
      expect("]");
      return with_pos(mk::call(name, std::move(args)), at);
    }
    if (is("(")) {
      // Either a parenthesized expression starting a comparison, or a
      // parenthesized formula. Try the comparison first.
      std::size_t save = pos_;
      try {
        return comparison();
      } catch (const ParseError&) {
        pos_ = save;
        expected_.clear();
      }
      take();
      auto inner = formula();
      SrcPos opos = peek().pos;
      if (accept("U")) {
        inner = with_pos(mk::binary(FormulaKind::U, inner, formula()), opos);
      } else if (accept("R")) {
        inner = with_pos(mk::binary(FormulaKind::R, inner, formula()), opos);
      }
      expect(")");
      return inner;
    }
    return comparison();
  }

  FormulaPtr comparison() {
    SrcPos at = peek().pos;
    auto lhs = expr();
    SrcPos opos = peek().pos;
    if (accept("in")) return with_pos(mk::in(lhs, expr()), opos);
    if (accept("=")) return with_pos(mk::eq(lhs, expr()), opos);
    if (is("not") && is("in", 1)) {
      take();
      take();
      return with_pos(mk::negate(with_pos(mk::in(lhs, expr()), opos)), opos);
    }
    (void)at;
    fail();
  }

  // ---- expressions ----------------------------------------------------
  ExprPtr expr() { return union_expr(); }

  ExprPtr union_expr() {
    auto lhs = inter_expr();
    for (;;) {
      SrcPos at = peek().pos;
      if (accept("+")) {
        lhs = with_pos(mk::binary(ExprKind::Union, lhs, inter_expr()), at);
      } else if (accept("-")) {
        lhs = with_pos(mk::binary(ExprKind::Diff, lhs, inter_expr()), at);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr inter_expr() {
    auto lhs = product_expr();
    for (;;) {
      SrcPos at = peek().pos;
      if (!accept("&")) return lhs;
      lhs = with_pos(mk::binary(ExprKind::Inter, lhs, product_expr()), at);
    }
  }

  ExprPtr product_expr() {
    auto lhs = join_expr();
    for (;;) {
      SrcPos at = peek().pos;
      if (!accept("->")) return lhs;
      lhs = with_pos(mk::binary(ExprKind::Product, lhs, join_expr()), at);
    }
  }

  ExprPtr join_expr() {
    auto lhs = unary_expr();
    for (;;) {
      SrcPos at = peek().pos;
      if (!accept(".")) return lhs;
      lhs = with_pos(mk::join(lhs, unary_expr()), at);
    }
  }

  ExprPtr unary_expr() {
    SrcPos at = peek().pos;
    if (accept("^")) return with_pos(mk::closure(unary_expr()), at);
    if (accept("*")) return with_pos(mk::rclosure(unary_expr()), at);
    if (accept("none")) return with_pos(mk::none(0), at);
    if (accept("(")) {
      auto inner = expr();
      expect(")");
      return inner;
    }
    auto id = expect_id();
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Name;
    e->name = id.text;
    e->pos = id.pos;
    if (accept("'")) e->primed = true;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
};

}  // namespace

Spec parse_spec(std::string_view text) { return Parser(lex(text)).spec(); }

FormulaPtr parse_formula(std::string_view text) { return Parser(lex(text)).lone_formula(); }

}  // namespace lbmc

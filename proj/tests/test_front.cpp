#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "lassobmc/errors.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/resolve.hpp"

using namespace lbmc;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(LASSOBMC_SOURCE_DIR) + "/" + rel);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

bool has_call(const Formula& f) {
  if (f.kind == FormulaKind::Call) return true;
  for (const auto& s : f.subs)
    if (has_call(*s)) return true;
  return false;
}

const char* kSmall = R"(
sig A { var r : set A, s : lone B }
sig B {}
fact { all x : A | x not in x.r }
trans { r' = r }
assert P { G (some A implies F some B) }
check P scope 2 A, exactly 1 B, 3 State
)";

}  // namespace

TEST_CASE("pifp parses into the expected declarations") {
  Spec s = parse_spec(slurp("specs/pifp.spec"));
  REQUIRE(s.sigs.size() == 3);
  CHECK(s.sigs[0].name == "Message");
  CHECK(s.sigs[0].fields.size() == 2);
  CHECK(s.sigs[0].fields[1].name == "from");
  CHECK(s.sigs[0].fields[1].mult == Mult::One);
  CHECK(s.sigs[1].fields[0].mutable_field);
  CHECK(s.facts.size() == 2);
  CHECK(s.preds.size() == 3);
  CHECK(s.preds[0].params.size() == 1);
  CHECK(s.trans != nullptr);
  CHECK(s.asserts.size() == 2);
  REQUIRE(s.cmds.size() == 2);
  CHECK(s.cmds[0].target == "Safety");
  CHECK(s.cmds[0].scopes.at("Partition") == ScopeBound{2, false});
  CHECK(s.cmds[0].max_state_scope == 4);
  CHECK(s.cmds[1].max_state_scope == 6);
}

TEST_CASE("scopes and multiplicities") {
  Spec s = parse_spec(kSmall);
  CHECK(s.cmds[0].scopes.at("B") == ScopeBound{1, true});
  CHECK(s.sigs[0].fields[0].mult == Mult::Set);
  CHECK(s.sigs[0].fields[1].mult == Mult::Lone);
  CHECK(s.sigs[0].fields[1].columns == std::vector<std::string>{"B"});
}

TEST_CASE("printing parses back to the same text") {
  for (const char* file : {"specs/pifp.spec", "specs/pifp_fixed.spec", "specs/pifp_live.spec"}) {
    Spec a = parse_spec(slurp(file));
    std::string once = print_spec(a);
    CHECK(print_spec(parse_spec(once)) == once);
  }
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto shape = gen::random_spec(rng);
    std::string once = print_spec(parse_spec(shape.text));
    REQUIRE_MESSAGE(print_spec(parse_spec(once)) == once, shape.text);
    auto f = parse_formula(gen::random_formula_text(rng, shape.spec, 3));
    auto g = parse_formula(to_string(*f));
    CHECK(same_formula(*f, *g));
  }
}

TEST_CASE("resolution inlines calls and assigns arities") {
  Spec s = resolve(parse_spec(slurp("specs/pifp.spec")));
  CHECK(s.resolved);
  CHECK_FALSE(has_call(*s.trans));
  for (const auto& a : s.asserts) CHECK_FALSE(has_call(*a.body));
  // resolving twice changes nothing
  Spec t = resolve(s);
  CHECK(print_spec(t) == print_spec(s));
  CHECK(same_formula(*t.trans, *s.trans));
}

TEST_CASE("resolution errors") {
  auto fails = [](const std::string& text) {
    CHECK_THROWS_AS(resolve(parse_spec(text)), ResolveError);
  };
  fails("sig A {} fact { some C }");
  fails("sig A { r : set A } fact { some A.A }");
  fails("sig A { r : set A } fact { r in A }");
  fails("sig A { var r : set A } fact { some r' }");
  fails("sig A { var r : set A } trans { G some r }");
  fails("sig State {}");
  fails("sig A { next : set A }");
  fails("sig A {} sig A {}");
  fails("sig A {} pred p[x : A] { some x } fact { p[A, A] }");
  fails("sig A {} fact { all x : A | some y }");
  fails("sig A {} check Missing");
}

TEST_CASE("parse errors carry a position and expectations") {
  try {
    parse_spec("sig A {\n  r : set\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 3);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_spec("sig A {} fact { some A U some A }"), ParseError);
  CHECK_THROWS_AS(parse_formula("some"), ParseError);
}

TEST_CASE("resolve_formula rejects primes and free names") {
  Spec s = resolve(parse_spec(kSmall));
  CHECK_NOTHROW(resolve_formula(s, parse_formula("G (some A.r)")));
  CHECK_THROWS_AS(resolve_formula(s, parse_formula("some r'")), ResolveError);
  CHECK_THROWS_AS(resolve_formula(s, parse_formula("some q")), ResolveError);
}

TEST_CASE("command targets") {
  Spec s = resolve(parse_spec(
      "sig A { r : set A } pred p[x : A, y : A] { x -> y in r } assert Q { some r } run p check Q"));
  auto run = command_target(s, s.cmds[0]);
  CHECK(run->kind == FormulaKind::Exists);
  CHECK(run->subs[0]->kind == FormulaKind::Exists);
  auto chk = command_target(s, s.cmds[1]);
  CHECK(chk->kind == FormulaKind::Some);
}

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "lassobmc/alloy.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/resolve.hpp"

using namespace lbmc;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(LASSOBMC_SOURCE_DIR) + "/" + rel);
  REQUIRE_MESSAGE(in.good(), rel);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

Spec load(const std::string& rel) { return resolve(parse_spec(slurp(rel))); }

}  // namespace

TEST_CASE("golden files are reproduced byte for byte") {
  CHECK(emit_trace_module() == slurp("tests/golden/trace.als"));
  CHECK(emit_alloy_spec(load("specs/pifp.spec"), "pifp") == slurp("tests/golden/pifp.als"));
  CHECK(emit_alloy_spec(load("specs/pifp.spec"), "pifp") == emit_alloy_spec(load("specs/pifp.spec"), "pifp"));
}

TEST_CASE("emitted modules pass the validator") {
  CHECK(validate_alloy(emit_trace_module()).empty());
  for (const char* file : {"specs/pifp.spec", "specs/pifp_fixed.spec", "specs/pifp_live.spec"}) {
    for (Idiom idiom : {Idiom::Local, Idiom::Global}) {
      auto text = emit_alloy_spec(load(file), "m", {idiom, 4});
      auto diags = validate_alloy(text);
      CHECK_MESSAGE(diags.empty(), file, "\n", text, "\n", diags.front());
    }
  }
}

TEST_CASE("random specs export to valid Alloy") {
  gen::Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    auto shape = gen::random_spec(rng);
    Spec s = shape.spec;
    NamedFormula a;
    a.name = "Prop";
    a.body = gen::random_formula(rng, s, 3);
    s.asserts.push_back(a);
    Command c;
    c.target = "Prop";
    c.max_state_scope = 3;
    s.cmds.push_back(c);
    auto text = emit_alloy_spec(s, "rnd", {rng() % 2 ? Idiom::Global : Idiom::Local, 4});
    auto diags = validate_alloy(text);
    REQUIRE_MESSAGE(diags.empty(), text, "\n", diags.front());
  }
}

TEST_CASE("global idiom puts the State column first") {
  auto text = emit_alloy_spec(load("specs/pifp.spec"), "pifp", {Idiom::Global, 4});
  CHECK(text.find("sig State {\n  messages : Channel -> Message\n}") != std::string::npos);
  CHECK(text.find("no Channel.(first.messages)") != std::string::npos);
}

TEST_CASE("the validator reports malformed input with a position") {
  auto bad = [](const std::string& text, int line) {
    auto d = validate_alloy(text);
    REQUIRE_FALSE(d.empty());
    CHECK(d.front().rfind(std::to_string(line) + ":", 0) == 0);
  };
  bad("sig A {", 1);
  bad("module m\n\nsig A {}\nfact { all x | some x }\n", 4);
  bad("sig A {}\nfact { some A. }\n", 2);
  bad("sig A {}\ncheck for 3\n", 2);
  bad("sig A {}\n\nassert P { some A implies }\n", 3);
  bad("sig A { f : A -> }\n", 1);
  bad("sig A {} $\n", 1);
  CHECK(validate_alloy("sig A {}\nfact { all x : A | some x }\nrun {} for 3\n").empty());
  CHECK(validate_alloy("-- only a comment\n").empty());
}

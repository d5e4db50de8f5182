#include "doctest.h"
#include "gen.hpp"
#include "lassobmc/errors.hpp"
#include "lassobmc/ground.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/resolve.hpp"
#include "lassobmc/sat.hpp"

using namespace lbmc;

namespace {

Spec spec(const std::string& text) { return resolve(parse_spec(text)); }

FormulaPtr f(const Spec& s, const std::string& text) { return resolve_formula(s, parse_formula(text)); }

// r@i given as a list of self loops on A$0
TraceInstance unary_trace(const Spec& s, std::vector<bool> on, std::optional<int> loop) {
  TraceInstance t;
  t.k = static_cast<int>(on.size());
  t.u = build_universe(s, {{"A", {1, true}}}, t.k);
  t.loop = loop;
  t.present.assign(static_cast<std::size_t>(t.u.size()), true);
  for (bool b : on) t.mutables["r"].push_back(b ? TupleSet{{0, 0}} : TupleSet{});
  return t;
}

std::size_t count(const Spec& s, const Scopes& sc, int k, EmbedOptions eo = {}) {
  return enumerate_traces(s, sc, k, EnumerationOptions{eo}).size();
}

// Models of the grounded trace space, projected on the primary variables.
std::size_t sat_models(const Spec& s, const Scopes& sc, int k, EmbedOptions eo) {
  Universe u = build_universe(s, sc, k);
  Embedder e(s, eo);
  std::vector<FormulaPtr> parts;
  for (const auto& fact : s.facts) parts.push_back(e.translate_positive(fact.body));
  if (s.trans) parts.push_back(e.desugar_trans(s.trans));
  Grounding g = ground(mk::conj_all(parts), s, u, axiomatize_trace(k, eo.finite_traces), eo.idiom);
  std::size_t n = 0;
  for (;;) {
    auto r = solve(g.cnf);
    if (r.status != SatStatus::Sat) break;
    ++n;
    std::vector<int> block;
    for (int v = 1; v <= g.vars.num_primary(); ++v) block.push_back(r.model[static_cast<std::size_t>(v)] ? -v : v);
    g.cnf.add(block);
  }
  return n;
}

}  // namespace

TEST_CASE("first-order evaluation on a hand-made instance") {
  Spec s = spec("sig A { r : set A } sig B { b : one A }");
  TraceInstance t;
  t.k = 1;
  t.u = build_universe(s, {{"A", {3, true}}, {"B", {1, true}}}, 1);
  t.present.assign(static_cast<std::size_t>(t.u.size()), true);
  t.statics["r"] = {{0, 1}, {1, 2}};
  t.statics["b"] = {{3, 0}};
  CHECK(eval_fo(f(s, "B.b.^r = A - B.b"), t));
  CHECK(eval_fo(f(s, "B.b.*r = A"), t));
  CHECK(eval_fo(f(s, "all x : A | lone x.r"), t));
  CHECK_FALSE(eval_fo(f(s, "some x : A | x in x.^r"), t));
  CHECK(eval_fo(f(s, "r.A = A - (A - r.A)"), t));
  CHECK(eval_fo(f(s, "one r.r"), t));
  CHECK_FALSE(eval_fo(f(s, "A -> A in r"), t));
  CHECK(eval_fo(f(s, "no (r & (A -> B.b))"), t));
}

TEST_CASE("LTL evaluation on lassos and finite prefixes") {
  Spec s = spec("sig A { var r : set A }");
  auto g = f(s, "G some r");
  auto fv = f(s, "F some r");
  auto gf = f(s, "G F some r");
  auto u = f(s, "(no r U some r)");
  auto rl = f(s, "(some r R no r)");
  auto x = f(s, "X some r");
  auto t = unary_trace(s, {false, true, false}, 1);  // 0 (1 2)^w
  CHECK_FALSE(eval_ltl_lasso(g, t));
  CHECK(eval_ltl_lasso(gf, t));
  CHECK(eval_ltl_lasso(u, t));
  CHECK(eval_ltl_lasso(x, t));
  CHECK_FALSE(eval_ltl_lasso(x, t, 1));
  CHECK(eval_ltl_lasso(x, t, 2));
  CHECK_FALSE(eval_ltl_lasso(rl, t));
  auto stuck = unary_trace(s, {false, false}, 1);
  CHECK_FALSE(eval_ltl_lasso(fv, stuck));
  CHECK(eval_ltl_lasso(rl, stuck));
  CHECK_FALSE(eval_ltl_lasso(u, stuck));
  auto prefix = unary_trace(s, {true, true}, std::nullopt);
  CHECK_FALSE(eval_ltl_lasso(g, prefix));
  CHECK_FALSE(eval_ltl_lasso(x, prefix, 1));
  CHECK(eval_ltl_lasso(f(s, "not X no r"), prefix, 1));
  CHECK(eval_ltl_lasso(fv, prefix));
  CHECK_FALSE(eval_ltl_lasso(rl, unary_trace(s, {false, false}, std::nullopt)));
}

TEST_CASE("enumeration counts on small spaces") {
  Spec lone = spec("sig A { var r : lone A }");
  CHECK(count(lone, {{"A", {1, true}}}, 1) == 4);
  CHECK(count(lone, {{"A", {1, true}}}, 2) == 12);
  CHECK(count(lone, {{"A", {1, false}}}, 2) == 15);
  CHECK(count_candidates(lone, {{"A", {1, false}}}, 2) == 15);
  CHECK(count(lone, {{"A", {1, true}}}, 2, {Idiom::Local, true}) == 4);
  CHECK(count(spec("sig A { var r : lone A } fact { some A }"), {{"A", {1, false}}}, 2) == 12);
  CHECK(count(spec("sig A { var r : lone A } trans { r' = r }"), {{"A", {1, false}}}, 2) == 9);
  CHECK(count(spec("sig A { r : one A }"), {{"A", {2, true}}}, 1) == 8);
}

TEST_CASE("contradictory facts give an empty stream") {
  Spec s = spec("sig A { var r : set A } fact { some r and no r }");
  CHECK(enumerate_traces(s, {{"A", {2, false}}}, 2).empty());
  std::size_t visits = 0;
  enumerate_traces(s, {{"A", {1, true}}}, 1, {}, [&](const TraceInstance&) { return ++visits, true; });
  CHECK(visits == 0);
}

TEST_CASE("the cap is checked before enumerating") {
  Spec s = spec("sig A { var r : set A }");
  EnumerationOptions eo;
  eo.cap = 1000;
  CHECK_THROWS_AS(enumerate_traces(s, {{"A", {3, true}}}, 3, eo), CapExceeded);
}

TEST_CASE("enumerated traces respect multiplicities and presence") {
  Spec s = spec("sig A { o : one B, var l : lone B } sig B {}");
  auto traces = enumerate_traces(s, {{"A", {2, false}}, {"B", {2, false}}}, 2);
  CHECK_FALSE(traces.empty());
  for (const auto& t : traces) {
    REQUIRE(respects_multiplicities(s, t));
    for (const auto& tuple : t.statics.at("o"))
      for (int a : tuple) CHECK(t.present[static_cast<std::size_t>(a)]);
  }
  TraceInstance bad = traces.front();
  bad.statics["o"].clear();
  bool owner_present = bad.present[0];
  CHECK(respects_multiplicities(s, bad) == !owner_present);
}

TEST_CASE("enumeration counts equal SAT model counts") {
  gen::Rng rng(53);
  int done = 0;
  while (done < 60) {
    auto shape = gen::random_spec(rng);
    Scopes sc;
    for (const auto& sig : shape.spec.sigs) sc[sig.name] = ScopeBound{1 + static_cast<int>(rng() % 2), rng() % 2 == 0};
    int k = 1 + static_cast<int>(rng() % 2);
    EmbedOptions eo{rng() % 3 == 0 ? Idiom::Global : Idiom::Local, rng() % 4 == 0};
    if (count_candidates(shape.spec, sc, k, EnumerationOptions{eo}) > 3000) continue;
    REQUIRE_MESSAGE(count(shape.spec, sc, k, eo) == sat_models(shape.spec, sc, k, eo), shape.text);
    ++done;
  }
}

TEST_CASE("disagreement records and summaries") {
  Spec s = spec("sig A { var r : set A }");
  auto t = unary_trace(s, {true, false}, 0);
  CHECK(format_tuples(t, {{0, 0}}) == "{A$0 -> A$0}");
  CHECK(format_tuples(t, {}) == "{}");
  std::string rec = disagreement_record("G some r", t, true, false);
  CHECK(rec.rfind("G some r | ", 0) == 0);
  CHECK(rec.size() > 20);
  CHECK(rec.substr(rec.size() - 15) == " | true | false");
  CHECK(trace_summary(t).rfind("k=2 loop=0", 0) == 0);
}

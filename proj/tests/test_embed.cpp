#include "doctest.h"
#include "gen.hpp"
#include "lassobmc/diff.hpp"
#include "lassobmc/embed.hpp"
#include "lassobmc/nnf.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/resolve.hpp"

using namespace lbmc;

namespace {

Spec small() { return resolve(parse_spec("sig A { var r : set A, s : set A }")); }

FormulaPtr f(const Spec& s, const std::string& text) { return resolve_formula(s, parse_formula(text)); }

bool mentions(const Formula& g, FormulaKind k) {
  if (g.kind == k) return true;
  for (const auto& sub : g.subs)
    if (mentions(*sub, k)) return true;
  return false;
}

}  // namespace

TEST_CASE("operator shapes") {
  Spec s = small();
  Embedder e(s, {});
  auto x = e.embed(nnf(f(s, "X some r")), mk::first());
  CHECK(x->kind == FormulaKind::And);
  CHECK(x->subs[0]->kind == FormulaKind::Some);
  auto xw = e.embed(nnf(f(s, "not X some r")), mk::first());
  CHECK(xw->kind == FormulaKind::Or);
  CHECK(xw->subs[0]->kind == FormulaKind::No);
  auto g = e.embed(f(s, "G some r"), mk::first());
  REQUIRE(g->kind == FormulaKind::And);
  CHECK(g->subs[0]->kind == FormulaKind::Infinite);
  CHECK(g->subs[1]->kind == FormulaKind::All);
  auto fin = Embedder(s, {Idiom::Local, true}).embed(f(s, "G some r"), mk::first());
  CHECK(fin->kind == FormulaKind::All);
  auto ev = e.embed(f(s, "F some r"), mk::first());
  CHECK(ev->kind == FormulaKind::Exists);
  for (const char* t : {"(some r U no s)", "(some r R no s)"}) {
    auto u = e.embed(f(s, t), mk::first());
    CHECK_FALSE(contains_temporal(*u));
  }
}

TEST_CASE("check translation negates the counterexample query") {
  Spec s = small();
  Embedder e(s, {});
  auto p = f(s, "G (some r implies F no r)");
  auto q = Embedder(s, {}).counterexample_query(p);
  auto c = Embedder(s, {}).translate_check(p);
  REQUIRE(c->kind == FormulaKind::Not);
  CHECK(same_formula(*c->subs[0], *q));
  CHECK(mentions(*e.translate_positive(p), FormulaKind::Infinite));
}

TEST_CASE("trans reads primed fields at the successor") {
  Spec s = resolve(parse_spec("sig A { var r : set A } trans { r' = r + A -> A }"));
  Embedder e(s, {});
  auto d = e.desugar_trans(s.trans);
  CHECK(d->kind == FormulaKind::All);
  CHECK_FALSE(contains_prime(*d));
}

TEST_CASE("embedding agrees with LTL semantics outside U/R on lassos") {
  gen::Rng rng(23);
  std::size_t compared = 0;
  for (int i = 0; i < 1500; ++i) {
    auto shape = gen::random_spec(rng);
    Scopes sc;
    for (const auto& sig : shape.spec.sigs) sc[sig.name] = ScopeBound{1 + static_cast<int>(rng() % 2), false};
    int k = 1 + static_cast<int>(rng() % 4);
    auto t = gen::random_trace(rng, shape.spec, sc, k, false);
    auto g = gen::random_formula(rng, shape.spec, 3);
    auto n = nnf(g);
    if (t.loop && contains_until_release(*n)) continue;
    for (Idiom idiom : {Idiom::Local, Idiom::Global}) {
      Embedder e(shape.spec, {idiom, false});
      bool fo = eval_fo(e.embed(n, mk::first()), t, idiom);
      REQUIRE_MESSAGE(fo == eval_ltl_lasso(n, t, 0), to_string(*g), " | ", trace_summary(t));
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("both idioms give the same verdicts") {
  gen::Rng rng(29);
  for (int i = 0; i < 400; ++i) {
    auto shape = gen::random_spec(rng);
    Scopes sc;
    for (const auto& sig : shape.spec.sigs) sc[sig.name] = ScopeBound{2, false};
    auto t = gen::random_trace(rng, shape.spec, sc, 3, false);
    auto n = nnf(gen::random_formula(rng, shape.spec, 3));
    bool a = eval_fo(Embedder(shape.spec, {Idiom::Local, false}).embed(n, mk::first()), t, Idiom::Local);
    bool b = eval_fo(Embedder(shape.spec, {Idiom::Global, false}).embed(n, mk::first()), t, Idiom::Global);
    REQUIRE(a == b);
  }
}

TEST_CASE("G on a loop-free trace is false in the default mode only") {
  Spec s = small();
  TraceInstance t;
  t.u = build_universe(s, {{"A", {1, true}}}, 2);
  t.k = 2;
  t.present.assign(static_cast<std::size_t>(t.u.size()), true);
  t.statics["s"] = {};
  t.mutables["r"] = {{{0, 0}}, {{0, 0}}};
  auto g = f(s, "G some r");
  CHECK_FALSE(eval_fo(Embedder(s, {}).embed(g, mk::first()), t));
  CHECK(eval_fo(Embedder(s, {Idiom::Local, true}).embed(g, mk::first()), t));
  t.loop = 0;
  CHECK(eval_fo(Embedder(s, {}).embed(g, mk::first()), t));
}

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lassobmc/ast.hpp"
#include "lassobmc/embed.hpp"
#include "lassobmc/universe.hpp"

namespace lbmc {

using Tuple = std::vector<int>;
using TupleSet = std::set<Tuple>;

/// A concrete bounded trace. Field tuples are owner-first atom ids without a
/// State column; mutable fields hold one value per state.
struct TraceInstance {
  Universe u;
  int k = 1;
  std::optional<int> loop;
  std::vector<bool> present;  // per atom; State atoms always present
  std::map<std::string, TupleSet> statics;
  std::map<std::string, std::vector<TupleSet>> mutables;

  [[nodiscard]] std::optional<int> successor(int i) const;
};

/// Textbook evaluation of a first-order formula (output of the embedding)
/// on `t`. Mutable fields must carry their State column in the layout of
/// `idiom`. `next`, `^next`, `*next`, `infinite`, `finite` come from (k, loop).
bool eval_fo(const FormulaPtr& f, const TraceInstance& t, Idiom idiom = Idiom::Local);

/// LTL evaluation of a resolved surface formula at position i. With a loop:
/// infinite-word semantics on stem . loop^omega via fixpoints over the k
/// positions. Without: bounded finite-prefix semantics (X strong, Xw weak at
/// the end, G false, F/U/R need a witness inside the prefix).
bool eval_ltl_lasso(const FormulaPtr& f, const TraceInstance& t, int i = 0);

/// All field values respect declared multiplicities and only relate
/// present atoms.
bool respects_multiplicities(const Spec& spec, const TraceInstance& t);

struct EnumerationOptions {
  EmbedOptions embed;
  std::uint64_t cap = std::uint64_t{1} << 24;
};

/// Number of candidate instances enumerate_traces would inspect
/// (multiplicity-respecting valuations times presence prefixes times loops).
std::uint64_t count_candidates(const Spec& resolved, const Scopes& scopes, int k, const EnumerationOptions& opts = {});

/// Visits every instance satisfying multiplicities, the embedded facts and
/// the desugared `trans`, for every loop choice. Present atoms of a
/// non-exact signature form a prefix of its atom list. `visit` returns false
/// to stop early. Throws CapExceeded before visiting anything when the
/// candidate count exceeds opts.cap.
void enumerate_traces(const Spec& resolved, const Scopes& scopes, int k, const EnumerationOptions& opts,
                      const std::function<bool(const TraceInstance&)>& visit);

std::vector<TraceInstance> enumerate_traces(const Spec& resolved, const Scopes& scopes, int k,
                                            const EnumerationOptions& opts = {});

/// One-line rendering: `k=2 loop=0 | present: ... | f = {...} | m@0 = {...}`.
std::string trace_summary(const TraceInstance& t);

/// `formula | trace | fo_verdict | ltl_verdict`
std::string disagreement_record(const std::string& formula, const TraceInstance& t, bool fo, bool ltl);

std::string format_tuples(const TraceInstance& t, const TupleSet& tuples);

}  // namespace lbmc

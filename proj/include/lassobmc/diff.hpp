#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lassobmc/check.hpp"
#include "lassobmc/oracle.hpp"

namespace lbmc {

/// Exhaustive counterpart of one scope of run_command: some enumerated
/// trace satisfies the command's embedded formula.
bool oracle_satisfiable(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts,
                        std::uint64_t cap = std::uint64_t{1} << 24);

/// Satisfiability of exactly scope k through grounding and the configured solver.
SatStatus pipeline_status(const Spec& resolved, const Command& cmd, int k, const CheckOptions& opts);

/// Embedding versus LTL semantics on enumerated traces.
struct FidelityStats {
  std::size_t compared = 0;
  std::size_t lasso_ur_disagreements = 0;  // reported, not failures
  std::vector<std::string> records;        // `formula | trace | fo_verdict | ltl_verdict`
  std::vector<std::string> failures;       // required agreement broken
};

/// For every enumerated trace t compares eval_fo(embed(nnf(f), first), t)
/// with eval_ltl_lasso(nnf(f), t, 0). Disagreements on lasso traces for
/// formulas containing U or R are recorded; all others are failures.
void fidelity_check(const Spec& resolved, const FormulaPtr& f, const Scopes& scopes, int k,
                    const EnumerationOptions& opts, FidelityStats& out);

bool contains_until_release(const Formula& f);

}  // namespace lbmc

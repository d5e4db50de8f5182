#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lassobmc/cnf.hpp"

namespace lbmc {

/// Fixed CDCL configuration: two watched literals, first-UIP learning with
/// local minimization, VSIDS (decay 0.95), Luby restarts (unit 100
/// conflicts), phase saving (initial phase false), LBD-based learnt clause
/// reduction at restarts. The seed only perturbs initial variable activities.
struct SolverConfig {
  std::uint64_t seed = 0x1a55b3c;
  std::int64_t conflict_budget = -1;  // < 0: unlimited
  double time_budget_seconds = 0;     // <= 0: unlimited
};

enum class SatStatus { Sat, Unsat, Unknown };

struct SolverStats {
  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
  std::int64_t restarts = 0;
};

struct SolveResult {
  SatStatus status = SatStatus::Unknown;
  std::vector<bool> model;  // indexed by variable, entry 0 unused
  SolverStats stats;
};

/// Internal CDCL solver. Every Sat answer is checked against all clauses
/// before it is returned; Unknown means the budget ran out.
SolveResult solve(const Cnf& cnf, const SolverConfig& config = {});

bool satisfies(const Cnf& cnf, const std::vector<bool>& model);

std::string export_dimacs(const Cnf& cnf);
/// Throws std::invalid_argument on malformed input.
Cnf parse_dimacs(std::string_view text);

/// Parses "s SATISFIABLE" / "s UNSATISFIABLE" / "s UNKNOWN" and "v ..."
/// lines. Unmentioned variables default to false. The model must satisfy
/// `cnf`; otherwise ExternalSolverError.
SolveResult import_external_result(std::string_view text, const Cnf& cnf);

/// Runs `command <dimacs-file>` and imports its standard output.
SolveResult solve_external(const Cnf& cnf, const std::string& command);

/// LASSO_BMC_SEED when set to an integer, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace lbmc

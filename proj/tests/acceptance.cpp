// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "lassobmc/alloy.hpp"
#include "lassobmc/diff.hpp"
#include "lassobmc/errors.hpp"
#include "lassobmc/nnf.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/printer.hpp"
#include "lassobmc/resolve.hpp"
#include "pifp_checks.hpp"

using namespace lbmc;
namespace fs = std::filesystem;

namespace {

constexpr double kSafetySeconds = 30;
constexpr double kFixedSeconds = 120;
constexpr double kDiffSeconds = 600;
constexpr int kDiffCases = 1000;
constexpr std::uint64_t kDiffCandidates = 4096;
constexpr int kNnfPairs = 10000;
constexpr std::size_t kFidelityComparisons = 10000;
constexpr std::size_t kExternalBatch = 200;

const std::string kSource = LASSOBMC_SOURCE_DIR;
const std::string kExternal = "python3 " + kSource + "/tools/pysat_solve.py";

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct SolvedCnf {
  Cnf cnf;
  SatStatus status;
};

// Every CNF solved for criteria 1-4, for the solver cross-check.
std::vector<SolvedCnf> g_cnfs;

void collect(int, const Cnf& c, SatStatus s) { g_cnfs.push_back({c, s}); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

Spec load(const std::string& rel) { return resolve(parse_spec(slurp(kSource + "/" + rel))); }

const Command& command(const Spec& s, const std::string& target) {
  for (const auto& c : s.cmds)
    if (c.target == target) return c;
  throw std::runtime_error("no command for " + target);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Outcome criterion1() {
  Spec s = load("specs/pifp.spec");
  CheckOptions o;
  o.on_cnf = collect;
  auto t0 = Clock::now();
  Verdict v = run_command(s, command(s, "Safety"), o);
  double secs = seconds_since(t0);
  bool found = v.kind == VerdictKind::Counterexample && v.scope <= 4;
  bool witness = found && pifp::self_send_at_forbidden_port(*v.trace);
  return {found && witness && secs < kSafetySeconds,
          std::string("pifp Safety: ") + verdict_name(v.kind) + " at State=" + std::to_string(v.scope) +
              ", self-send at forbidden port " + (witness ? "yes" : "no") + ", " + fmt(secs) + "s (limit " +
              fmt(kSafetySeconds) + "s)"};
}

Outcome criterion2() {
  Spec s = load("specs/pifp_fixed.spec");
  CheckOptions o;
  o.on_cnf = collect;
  auto t0 = Clock::now();
  Verdict v = run_command(s, command(s, "Safety"), o);
  double secs = seconds_since(t0);
  bool ok = v.kind == VerdictKind::NoCounterexample && v.scope == 6;
  return {ok && secs < kFixedSeconds, std::string("fixed Safety: ") + verdict_name(v.kind) + " up to State=" +
                                          std::to_string(v.scope) + ", " + fmt(secs) + "s (limit " +
                                          fmt(kFixedSeconds) + "s)"};
}

Outcome criterion3() {
  Spec s = load("specs/pifp_live.spec");
  CheckOptions fin;
  fin.finite_traces = true;
  fin.on_cnf = collect;
  Verdict vf = run_command(s, command(s, "Liveness"), fin);
  bool spurious = vf.kind == VerdictKind::Counterexample && !vf.trace->loop &&
                  pifp::fresh_message_in_final_state(*vf.trace);
  CheckOptions lasso;
  lasso.on_cnf = collect;
  Verdict vl = run_command(s, command(s, "Liveness"), lasso);
  bool holds = vl.kind == VerdictKind::NoCounterexample && vl.scope == 6;
  return {spurious && holds, std::string("finite traces: ") + verdict_name(vf.kind) + " at State=" +
                                 std::to_string(vf.scope) + " with fresh message in final state " +
                                 (spurious ? "yes" : "no") + "; lasso: " + verdict_name(vl.kind) + " up to State=" +
                                 std::to_string(vl.scope)};
}

Outcome criterion4() {
  gen::Rng rng(0xacce55);
  auto t0 = Clock::now();
  int agree = 0, checks = 0, sat = 0;
  std::string first_bad;
  for (int i = 0; i < kDiffCases; ++i) {
    auto c = gen::random_diff_case(rng, kDiffCandidates);
    c.opts.on_cnf = collect;
    bool oracle = oracle_satisfiable(c.shape.spec, c.cmd, c.k, c.opts);
    SatStatus p = pipeline_status(c.shape.spec, c.cmd, c.k, c.opts);
    checks += c.cmd.kind == CommandKind::Check;
    sat += oracle;
    if (p != SatStatus::Unknown && (p == SatStatus::Sat) == oracle)
      ++agree;
    else if (first_bad.empty())
      first_bad = " first mismatch: " + c.formula_text + " k=" + std::to_string(c.k) + " in\n" + c.shape.text;
  }
  double secs = seconds_since(t0);
  return {agree == kDiffCases && secs < kDiffSeconds,
          std::to_string(agree) + "/" + std::to_string(kDiffCases) + " random specs agree with enumeration (" +
              std::to_string(checks) + " check, " + std::to_string(kDiffCases - checks) + " run, " +
              std::to_string(sat) + " satisfiable), " + fmt(secs) + "s (limit " + fmt(kDiffSeconds) + "s)" +
              first_bad};
}

Scopes small_scopes(gen::Rng& rng, const Spec& s) {
  Scopes sc;
  for (const auto& sig : s.sigs) sc[sig.name] = ScopeBound{1 + static_cast<int>(rng() % 3), rng() % 2 == 0};
  return sc;
}

Outcome criterion5() {
  gen::Rng rng(0x5eed5);
  int agree = 0;
  for (int i = 0; i < kNnfPairs; ++i) {
    auto shape = gen::random_spec(rng);
    int k = 1 + static_cast<int>(rng() % 4);
    auto t = gen::random_trace(rng, shape.spec, small_scopes(rng, shape.spec), k, true);
    auto f = gen::random_formula(rng, shape.spec, 3);
    agree += eval_ltl_lasso(f, t) == eval_ltl_lasso(nnf(f), t);
  }
  // a loop-free trace on which the dual forms part ways
  std::string witness;
  for (int i = 0; i < 10000 && witness.empty(); ++i) {
    auto shape = gen::random_spec(rng);
    int k = 1 + static_cast<int>(rng() % 3);
    auto t = gen::random_trace(rng, shape.spec, small_scopes(rng, shape.spec), k, false);
    if (t.loop) continue;
    std::string p = gen::random_formula_text(rng, shape.spec, 0, false);
    auto not_g = resolve_formula(shape.spec, parse_formula("not G (" + p + ")"));
    auto f_not = resolve_formula(shape.spec, parse_formula("F not (" + p + ")"));
    bool a = eval_ltl_lasso(not_g, t), b = eval_ltl_lasso(f_not, t);
    if (a != b)
      witness = to_string(*not_g) + " = " + (a ? "true" : "false") + ", " + to_string(*f_not) + " = " +
                (b ? "true" : "false") + " on " + trace_summary(t);
  }
  return {agree == kNnfPairs && !witness.empty(),
          std::to_string(agree) + "/" + std::to_string(kNnfPairs) + " lasso pairs agree; finite-prefix witness: " +
              (witness.empty() ? "none found" : witness)};
}

Outcome criterion6() {
  gen::Rng rng(0xf1de1);
  FidelityStats st;
  std::size_t cases = 0, ur_lasso_cases = 0;
  while (st.compared < kFidelityComparisons || cases < 300) {
    auto c = gen::random_diff_case(rng, 2048);
    EnumerationOptions eo{EmbedOptions{c.opts.idiom, false}};
    auto f = gen::random_formula(rng, c.shape.spec, 1 + static_cast<int>(rng() % 3));
    fidelity_check(c.shape.spec, f, c.cmd.scopes, c.k, eo, st);
    ++cases;
    ur_lasso_cases += contains_until_release(*nnf(f));
  }
  fs::path report = fs::current_path() / "fidelity_report.txt";
  std::ofstream out(report);
  out << "# formula | trace | fo_verdict | ltl_verdict\n";
  for (const auto& r : st.records) out << r << "\n";
  std::string detail = std::to_string(st.compared - st.lasso_ur_disagreements - st.failures.size()) + "/" +
                       std::to_string(st.compared - st.lasso_ur_disagreements) +
                       " required comparisons agree over " + std::to_string(cases) + " formulas (" +
                       std::to_string(ur_lasso_cases) + " with U/R); " + std::to_string(st.lasso_ur_disagreements) +
                       " U/R lasso disagreements written to " + report.string();
  if (!st.failures.empty()) detail += "; first failure: " + st.failures.front();
  return {st.failures.empty() && st.compared >= kFidelityComparisons, detail};
}

// Runs the external solver over many CNFs at once; results are preceded by
// `c file PATH` lines.
std::vector<SolveResult> solve_external_batch(const std::vector<SolvedCnf>& cnfs) {
  fs::path dir = fs::temp_directory_path() / "lassobmc_acceptance_cnf";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<SolveResult> results;
  for (std::size_t start = 0; start < cnfs.size(); start += kExternalBatch) {
    std::size_t end = std::min(cnfs.size(), start + kExternalBatch);
    std::string cmd = kExternal + " --batch";
    std::vector<std::string> paths;
    for (std::size_t i = start; i < end; ++i) {
      std::string p = (dir / ("c" + std::to_string(i) + ".cnf")).string();
      std::ofstream(p) << export_dimacs(cnfs[i].cnf);
      paths.push_back(p);
      cmd += " '" + p + "'";
    }
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw ExternalSolverError("cannot start " + kExternal);
    std::string output;
    char buf[65536];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    pclose(pipe);
    std::vector<std::string> chunks;
    std::istringstream lines(output);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("c file ", 0) == 0)
        chunks.emplace_back();
      else if (!chunks.empty())
        chunks.back() += line + "\n";
    }
    if (chunks.size() != paths.size()) throw ExternalSolverError("external solver skipped some files");
    for (std::size_t i = 0; i < chunks.size(); ++i)
      results.push_back(import_external_result(chunks[i], cnfs[start + i].cnf));
  }
  fs::remove_all(dir);
  return results;
}

Outcome criterion7() {
  std::size_t agree = 0, sat = 0;
  std::string error;
  try {
    auto ext = solve_external_batch(g_cnfs);
    for (std::size_t i = 0; i < g_cnfs.size(); ++i) {
      agree += ext[i].status == g_cnfs[i].status && g_cnfs[i].status != SatStatus::Unknown;
      sat += g_cnfs[i].status == SatStatus::Sat;
    }
  } catch (const std::exception& e) {
    error = std::string("; external solver error: ") + e.what();
  }
  return {error.empty() && agree == g_cnfs.size() && !g_cnfs.empty(),
          std::to_string(agree) + "/" + std::to_string(g_cnfs.size()) +
              " CNFs from criteria 1-4 agree between the internal and external solver (" + std::to_string(sat) +
              " satisfiable, external models validated)" + error};
}

Outcome criterion8() {
  std::string trace = emit_trace_module();
  std::string spec = emit_alloy_spec(load("specs/pifp.spec"), "pifp");
  auto d1 = validate_alloy(trace);
  auto d2 = validate_alloy(spec);
  bool golden = trace == slurp(kSource + "/tests/golden/trace.als") && spec == slurp(kSource + "/tests/golden/pifp.als");
  bool stable = trace == emit_trace_module() && spec == emit_alloy_spec(load("specs/pifp.spec"), "pifp");
  std::string detail = "trace.als " + std::string(d1.empty() ? "valid" : "invalid: " + d1.front()) + ", pifp.als " +
                       (d2.empty() ? "valid" : "invalid: " + d2.front()) + ", golden files " +
                       (golden && stable ? "byte-identical" : "differ");
  return {d1.empty() && d2.empty() && golden && stable, detail};
}

}  // namespace

int main() {
  Outcome (*const criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                                   criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

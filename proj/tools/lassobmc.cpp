// lassobmc: bounded LTL checking of relational specifications.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lassobmc/alloy.hpp"
#include "lassobmc/check.hpp"
#include "lassobmc/diff.hpp"
#include "lassobmc/errors.hpp"
#include "lassobmc/parser.hpp"
#include "lassobmc/resolve.hpp"

namespace {

using namespace lbmc;

constexpr int kExitHolds = 0;
constexpr int kExitFound = 1;
constexpr int kExitError = 2;
constexpr int kExitResource = 3;

struct Flags {
  std::string file;
  std::string name;
  int max_scope = 0;
  std::vector<std::string> scopes;
  std::string idiom = "local";
  bool finite_traces = false;
  std::string solver = "internal";
  std::string dimacs;
  std::string format = "text";
  std::int64_t conflict_budget = -1;
  double timeout = 0;
  std::string out_dir;
};

Spec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Spec s = resolve(parse_spec(buf.str()));
  for (const auto& w : s.warnings) std::cerr << path << ": warning: " << w << "\n";
  return s;
}

// "Sig=N" or "Sig=exactly N"
std::pair<std::string, ScopeBound> parse_scope(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--scope", "expected Sig=N or Sig=exactly N");
  std::string sig = text.substr(0, eq);
  std::istringstream rest(text.substr(eq + 1));
  std::string word;
  ScopeBound b;
  rest >> word;
  if (word == "exactly") {
    b.exact = true;
    rest >> word;
  }
  std::size_t used = 0;
  try {
    b.bound = std::stoi(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != word.size() || b.bound < 0)
    throw CLI::ValidationError("--scope", "bad scope '" + text + "'");
  return {sig, b};
}

CheckOptions options(const Flags& f) {
  CheckOptions o;
  o.max_scope = f.max_scope;
  for (const auto& s : f.scopes) o.scopes.insert(parse_scope(s));
  o.idiom = f.idiom == "global" ? Idiom::Global : Idiom::Local;
  o.finite_traces = f.finite_traces;
  if (f.solver.rfind("external:", 0) == 0)
    o.external_solver = f.solver.substr(9);
  else if (f.solver != "internal")
    throw CLI::ValidationError("--solver", "expected internal or external:CMD");
  o.dimacs_dir = f.dimacs;
  o.solver.seed = seed_from_env(o.solver.seed);
  o.solver.conflict_budget = f.conflict_budget;
  o.solver.time_budget_seconds = f.timeout;
  return o;
}

Command find_or_make(const Spec& s, const std::string& name, CommandKind kind) {
  for (const auto& c : s.cmds)
    if (c.target == name && c.kind == kind) return c;
  Command c;
  c.kind = kind;
  c.target = name;
  if (const Command* other = s.find_command(name)) {
    c.scopes = other->scopes;
    c.max_state_scope = other->max_state_scope;
  }
  return c;
}

int do_command(const Flags& f, CommandKind kind) {
  Spec s = load(f.file);
  Command cmd = find_or_make(s, f.name, kind);
  Verdict v = run_command(s, cmd, options(f));
  std::cout << (f.format == "json" ? format_verdict_json(v, s) : format_verdict_text(v, s));
  switch (v.kind) {
    case VerdictKind::Counterexample: return kExitFound;
    case VerdictKind::Instance: return kExitHolds;
    case VerdictKind::NoCounterexample: return kExitHolds;
    case VerdictKind::NoInstance: return kExitFound;
    case VerdictKind::ResourceLimit: return kExitResource;
  }
  return kExitError;
}

int do_export(const Flags& f) {
  Spec s = load(f.file);
  namespace fs = std::filesystem;
  fs::create_directories(f.out_dir);
  std::string stem = fs::path(f.file).stem().string();
  AlloyOptions opts;
  opts.idiom = f.idiom == "global" ? Idiom::Global : Idiom::Local;
  std::ofstream(fs::path(f.out_dir) / "trace.als") << emit_trace_module();
  std::ofstream(fs::path(f.out_dir) / (stem + ".als")) << emit_alloy_spec(s, stem, opts);
  std::cout << "wrote " << (fs::path(f.out_dir) / "trace.als").string() << "\n"
            << "wrote " << (fs::path(f.out_dir) / (stem + ".als")).string() << "\n";
  return kExitHolds;
}

int do_oracle_diff(const Flags& f) {
  Spec s = load(f.file);
  CheckOptions o = options(f);
  int bound = f.max_scope > 0 ? f.max_scope : kDefaultScope;
  std::vector<Command> cmds = s.cmds;
  if (cmds.empty())
    for (const auto& a : s.asserts) cmds.push_back(find_or_make(s, a.name, CommandKind::Check));
  bool ok = true;
  for (const auto& c : cmds) {
    for (int k = 1; k <= bound; ++k) {
      SatStatus p = pipeline_status(s, c, k, o);
      if (p == SatStatus::Unknown) return kExitResource;
      bool pipeline = p == SatStatus::Sat;
      bool oracle = oracle_satisfiable(s, c, k, o);
      ok = ok && pipeline == oracle;
      std::cout << (pipeline == oracle ? "agree    " : "DISAGREE ") << (c.kind == CommandKind::Check ? "check " : "run ")
                << c.target << " State=" << k << " pipeline=" << (pipeline ? "sat" : "unsat")
                << " oracle=" << (oracle ? "sat" : "unsat") << "\n";
    }
  }
  EnumerationOptions eo{EmbedOptions{o.idiom, o.finite_traces}};
  for (const auto& a : s.asserts) {
    Command c = find_or_make(s, a.name, CommandKind::Check);
    for (int k = 1; k <= bound; ++k) {
      FidelityStats st;
      fidelity_check(s, a.body, command_scopes(c, o), k, eo, st);
      ok = ok && st.failures.empty();
      std::cout << "fidelity " << a.name << " State=" << k << " compared=" << st.compared
                << " failures=" << st.failures.size() << " reported=" << st.lasso_ur_disagreements << "\n";
      for (const auto& r : st.failures) std::cout << "  FAIL " << r << "\n";
      for (const auto& r : st.records) std::cout << "  " << r << "\n";
    }
  }
  return ok ? kExitHolds : kExitFound;
}

void add_check_flags(CLI::App* sub, Flags& f) {
  sub->add_option("file", f.file, "specification file")->required();
  sub->add_option("--name", f.name, "assertion or predicate")->required();
  sub->add_option("--max-scope", f.max_scope, "largest State scope")->check(CLI::PositiveNumber);
  sub->add_option("--scope", f.scopes, "Sig=N or Sig=exactly N (repeatable)");
  sub->add_option("--idiom", f.idiom, "state idiom")->check(CLI::IsMember({"local", "global"}));
  sub->add_flag("--finite-traces", f.finite_traces, "plain total order, no back loop");
  sub->add_option("--solver", f.solver, "internal or external:CMD");
  sub->add_option("--dimacs", f.dimacs, "write every CNF to this directory");
  sub->add_option("--trace-format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--conflict-budget", f.conflict_budget, "solver conflict limit per scope");
  sub->add_option("--timeout", f.timeout, "solver time limit per scope, seconds");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded LTL model checking of relational specifications"};
  app.require_subcommand(1);
  Flags f;
  auto* check = app.add_subcommand("check", "search for a counterexample to an assertion");
  add_check_flags(check, f);
  auto* run = app.add_subcommand("run", "search for an instance of a predicate or assertion");
  add_check_flags(run, f);
  auto* exp = app.add_subcommand("export-alloy", "write trace.als and the spec as Alloy");
  exp->add_option("file", f.file)->required();
  exp->add_option("--out", f.out_dir)->required();
  exp->add_option("--idiom", f.idiom)->check(CLI::IsMember({"local", "global"}));
  auto* diff = app.add_subcommand("oracle-diff", "compare the SAT pipeline with exhaustive enumeration");
  diff->add_option("file", f.file)->required();
  diff->add_option("--max-scope", f.max_scope)->check(CLI::PositiveNumber);
  diff->add_option("--scope", f.scopes);
  diff->add_option("--idiom", f.idiom)->check(CLI::IsMember({"local", "global"}));
  diff->add_flag("--finite-traces", f.finite_traces);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  try {
    if (*check) return do_command(f, CommandKind::Check);
    if (*run) return do_command(f, CommandKind::Run);
    if (*exp) return do_export(f);
    if (*diff) return do_oracle_diff(f);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << f.file << ": error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

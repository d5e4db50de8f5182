#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string("cd ") + LASSOBMC_SOURCE_DIR + " && " + LASSOBMC_CLI + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / ("lassobmc_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
  auto cex = cli("check specs/pifp.spec --name Safety");
  CHECK(cex.code == 1);
  CHECK(cex.out.rfind("VERDICT counterexample scope State=2 loop=none\n", 0) == 0);
  auto ok = cli("check specs/pifp_fixed.spec --name Safety");
  CHECK(ok.code == 0);
  CHECK(ok.out == "VERDICT no-counterexample up-to State=6\n");
  CHECK(cli("check specs/pifp_live.spec --name Liveness --finite-traces").code == 1);
  CHECK(cli("run specs/pifp.spec --name send --max-scope 2").code == 0);
  CHECK(cli("check specs/pifp_fixed.spec --name Safety --conflict-budget 0").code == 3);
}

TEST_CASE("scope flags override the command") {
  auto r = cli("check specs/pifp.spec --name Safety --scope Partition=1 --scope 'Message=exactly 1' --max-scope 3");
  CHECK(r.code == 1);
  CHECK(r.out.find("Partition = {Partition$0}") != std::string::npos);
  CHECK(r.out.find("Message = {Message$0}") != std::string::npos);
  CHECK(cli("check specs/pifp.spec --name Safety --scope Partition=x").code == 2);
  CHECK(cli("check specs/pifp.spec --name Safety --scope Nope=2").code == 2);
}

TEST_CASE("errors exit with 2 and a message") {
  auto d = scratch("errors");
  std::ofstream(d / "bad.spec") << "sig A {\n  r : set\n}\n";
  auto parse = cli("check " + (d / "bad.spec").string() + " --name X");
  CHECK(parse.code == 2);
  CHECK(parse.out.find("line 3") != std::string::npos);
  CHECK(cli("check specs/pifp.spec --name Missing").code == 2);
  CHECK(cli("check no/such/file.spec --name Safety").code == 2);
  CHECK(cli("check specs/pifp.spec").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("external solver and JSON output") {
  auto ext = cli("check specs/pifp.spec --name Safety --solver 'external:python3 tools/pysat_solve.py'");
  CHECK(ext.code == 1);
  CHECK(ext.out.rfind("VERDICT counterexample scope State=2", 0) == 0);
  auto j = cli("check specs/pifp.spec --name Safety --trace-format json");
  CHECK(j.code == 1);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["verdict"] == "counterexample");
  CHECK(doc["states"].size() == 2);
  CHECK(cli("check specs/pifp.spec --name Safety --solver minisat").code == 2);
}

TEST_CASE("DIMACS files per scope") {
  auto d = scratch("dimacs");
  CHECK(cli("check specs/pifp_fixed.spec --name Safety --max-scope 2 --dimacs " + d.string()).code == 0);
  CHECK(fs::exists(d / "Safety_k1.cnf"));
  CHECK(fs::exists(d / "Safety_k2.cnf"));
  CHECK(slurp(d / "Safety_k2.cnf").rfind("p cnf ", 0) == 0);
}

TEST_CASE("export-alloy reproduces the golden files") {
  auto d = scratch("alloy");
  auto r = cli("export-alloy specs/pifp.spec --out " + d.string());
  CHECK(r.code == 0);
  CHECK(slurp(d / "trace.als") == slurp(fs::path(LASSOBMC_SOURCE_DIR) / "tests/golden/trace.als"));
  CHECK(slurp(d / "pifp.als") == slurp(fs::path(LASSOBMC_SOURCE_DIR) / "tests/golden/pifp.als"));
}

TEST_CASE("oracle-diff reports agreement") {
  auto d = scratch("diff");
  std::ofstream(d / "small.spec") << "sig A { var r : lone A }\n"
                                     "trans { r' = r or no r' }\n"
                                     "assert Drains { F no r }\n"
                                     "assert Until { (some r U no r) }\n";
  auto r = cli("oracle-diff " + (d / "small.spec").string() + " --max-scope 3 --scope A=2");
  CHECK(r.code == 0);
  CHECK(r.out.find("agree    check Drains State=3") != std::string::npos);
  CHECK(r.out.find("DISAGREE") == std::string::npos);
  CHECK(r.out.find("fidelity Until State=2") != std::string::npos);
}

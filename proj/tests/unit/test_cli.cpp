#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("KSF_CLI_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden_path(const std::string& name) {
  const char* dir = std::getenv("KSF_GOLDEN_DIR");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit code partition across the five scenarios") {
  // 0: converged evaluation
  const RunResult ok = run_cli("eval gamma_k k=2 x=4");
  REQUIRE(ok.exit_code == 0);
  REQUIRE_THAT(ok.out, ContainsSubstring("value            = 2"));

  // 1: numeric failure of a printed identity at k != 1
  const RunResult fail = run_cli(
      "verify gf8 k=2 lambda=1 alpha=1 beta=2 gamma=1 delta=2 x=0.1 y=0.1 t=0.05");
  REQUIRE(fail.exit_code == 1);
  REQUIRE_THAT(fail.out, ContainsSubstring("pass    = false"));

  // 2: domain error (gamma pole)
  REQUIRE(run_cli("eval gamma_k k=2 x=-4").exit_code == 2);

  // 3: non-convergence under a tiny budget
  REQUIRE(run_cli("eval hyp2f1_k k=1 alpha=1 beta=1 gamma=2 x=0.95 --max-terms 10")
              .exit_code == 3);

  // 4: paper-discrepancy verdict
  REQUIRE(run_cli("sweep gf8 --samples 20 --seed 7").exit_code == 4);
}

TEST_CASE("usage errors are rejected before computation") {
  REQUIRE(run_cli("sweep kg1 --samples 5").exit_code == 2);  // missing required seed
  REQUIRE(run_cli("eval gamma_k k=2 x=4 zz=1").exit_code == 2);
  REQUIRE(run_cli("eval gamma_k k=2").exit_code == 2);
  REQUIRE(run_cli("eval not_a_function k=2 x=1").exit_code == 2);
  REQUIRE(run_cli("verify not_an_identity k=1").exit_code == 2);
  REQUIRE(run_cli("eval gamma_k k=2 x=oops").exit_code == 2);
}

TEST_CASE("golden sweep report matches byte for byte") {
  const RunResult r = run_cli("sweep kg1 --samples 100 --seed 7 --format json");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == read_file(golden_path("sweep_kg1_s100_seed7.json")));
}

TEST_CASE("same seed gives byte-identical output across runs and thread counts") {
  const std::string cmd = "sweep appk15 --samples 30 --seed 42 --format json";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  REQUIRE(a.out == b.out);
  const char* bin = std::getenv("KSF_CLI_BIN");
  const std::string threaded =
      "env KSF_THREADS=4 " + std::string(bin) + " " + cmd + " 2>/dev/null";
  FILE* pipe = popen(threaded.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  REQUIRE(a.out == out);
}

TEST_CASE("list subcommand") {
  const RunResult ids = run_cli("list identities");
  REQUIRE(ids.exit_code == 0);
  for (const char* id : {"gf1", "gf9", "Euler", "kpoc5", "krl5"}) {
    REQUIRE_THAT(ids.out, ContainsSubstring(id));
  }
  const RunResult fns = run_cli("list functions");
  REQUIRE(fns.exit_code == 0);
  REQUIRE_THAT(fns.out, ContainsSubstring("f4_k"));

  const RunResult js = run_cli("list identities --format json");
  REQUIRE(js.exit_code == 0);
  REQUIRE_THAT(js.out, ContainsSubstring("\"identities\":["));
  REQUIRE_THAT(js.out, ContainsSubstring("\"id\":\"gf7\""));
}

TEST_CASE("eval and verify value checks") {
  const RunResult hyp =
      run_cli("eval hyp2f1_k k=1 alpha=1 beta=1 gamma=2 x=0.5 --rel-tol 1e-13");
  REQUIRE(hyp.exit_code == 0);
  REQUIRE_THAT(hyp.out, ContainsSubstring("value            = 1.38629436"));

  const RunResult poch = run_cli("eval pochhammer_k k=2 x=2 n=3");
  REQUIRE(poch.exit_code == 0);
  REQUIRE_THAT(poch.out, ContainsSubstring("value            = 48"));

  const RunResult km = run_cli("verify kummer2 k=2 n=2 beta=1 gamma=4");
  REQUIRE(km.exit_code == 0);
  REQUIRE_THAT(km.out, ContainsSubstring("lhs     = 0.625"));
  REQUIRE_THAT(km.out, ContainsSubstring("rhs     = 0.625"));
  REQUIRE_THAT(km.out, ContainsSubstring("pass    = true"));

  const RunResult eu = run_cli("verify Euler k=1 alpha=1 beta=1 gamma=2 x=0.25");
  REQUIRE(eu.exit_code == 0);
  REQUIRE_THAT(eu.out, ContainsSubstring("pass    = true"));
}

TEST_CASE("eval kfrac subcommands") {
  const RunResult mono = run_cli("eval kfrac_monomial k=2 eta=2 mu=-2 --format json");
  REQUIRE(mono.exit_code == 0);
  REQUIRE_THAT(mono.out, ContainsSubstring("\"value\":0.2499999999999997"));
  REQUIRE_THAT(mono.out, ContainsSubstring("\"exponent\":2"));

  const RunResult quad = run_cli("eval kfrac_quadrature k=1 eta=0 mu=-1 z=1");
  REQUIRE(quad.exit_code == 0);
  REQUIRE_THAT(quad.out, ContainsSubstring("value            = 1"));
}

TEST_CASE("csv sweep output modes") {
  const RunResult summary = run_cli("sweep kg1 --samples 5 --seed 3 --format csv");
  REQUIRE(summary.exit_code == 0);
  REQUIRE_THAT(summary.out,
               ContainsSubstring("id,seed,samples,passes,max_rel_err,median_rel_err,verdict"));

  const RunResult verbose = run_cli("sweep kg1 --samples 5 --seed 3 --format csv --verbose");
  REQUIRE(verbose.exit_code == 0);
  // header plus five sample rows
  REQUIRE(std::count(verbose.out.begin(), verbose.out.end(), '\n') == 6);
}

TEST_CASE("output path writes the same bytes") {
  const char* bin = std::getenv("KSF_CLI_BIN");
  const std::string path = "/tmp/ksf_cli_test_output.json";
  std::remove(path.c_str());
  const std::string cmd = std::string(bin) +
                          " sweep kg1 --samples 10 --seed 5 --format json -o " + path +
                          " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const RunResult direct = run_cli("sweep kg1 --samples 10 --seed 5 --format json");
  REQUIRE(read_file(path) == direct.out);
  std::remove(path.c_str());
}

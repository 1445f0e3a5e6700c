#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

std::string cli_path() {
  const char* p = std::getenv("HALFLINE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "HALFLINE_CLI must point at the binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("keller subcommand prints csv") {
  const RunResult r = run("keller --gamma 1.5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("gamma,keller_constant,cosh_ratio_sup,t_star") != std::string::npos);
  CHECK(r.output.find("0.1875") != std::string::npos);
}

TEST_CASE("gfun single point") {
  const RunResult r = run("gfun --a 1");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "a,value,argmax,attained");
  REQUIRE(std::getline(in, row));
  double a = 0.0, value = 0.0;
  REQUIRE(std::sscanf(row.c_str(), "%lf,%lf", &a, &value) == 2);
  CHECK(value == doctest::Approx(1.0694322449184150).epsilon(1e-12));
}

TEST_CASE("stdout is byte-stable across runs") {
  const std::string cmd = "gfun --a-min 0.1 --a-max 20 --count 40 --spacing log";
  const RunResult first = run(cmd);
  const RunResult second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("curve writes the requested file and its reference line") {
  TempFile csv("cli_curve_tmp.csv");
  TempFile line("cli_curve_tmp_line.csv");
  const RunResult r = run("curve --n 6 --out " + csv.path);
  CHECK(r.exit_code == 0);
  const std::string text = slurp(csv.path);
  CHECK(text.rfind("theta,radius4,re,im\n", 0) == 0);
  CHECK(slurp(line.path).rfind("theta,radius4,re,im\n", 0) == 0);
}

TEST_CASE("extremal defaults to json") {
  const RunResult r = run("extremal --m 1 --theta 1.5707963267948966");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"b\"") != std::string::npos);
  CHECK(r.output.find("\"bs_residual\"") != std::string::npos);
}

TEST_CASE("delta-eigs with an explicit box") {
  const RunResult r = run("delta-eigs --c-re 4 --c-im 0 --b 10 --box 1e-6 9 -9 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("re,im") != std::string::npos);
  CHECK(r.output.find("-3.9999999") != std::string::npos);
}

TEST_CASE("verify-bs on a csv potential") {
  TempFile csv("cli_pot_tmp.csv");
  {
    std::ofstream out(csv.path, std::ios::binary);
    out << "x,re_v,im_v\n";
    for (int i = 0; i <= 60; ++i) {
      const double x = 6.0 * i / 60.0;
      out << x << "," << 0.8 * std::exp(-(x - 2.0) * (x - 2.0)) << ",0.1\n";
    }
  }
  const RunResult r = run("verify-bs --potential csv --path " + csv.path +
                          " --bc robin --sigma 0.5 --mu-re 1 --mu-im 0.4 --nodes 100");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("usage and config errors exit with 1") {
  CHECK(run("").exit_code == 1);                       // missing subcommand
  CHECK(run("frobnicate").exit_code == 1);             // unknown subcommand
  CHECK(run("gfun --bogus 1").exit_code == 1);         // unknown flag
  CHECK(run("gfun").exit_code == 1);                   // missing a / a_min
  CHECK(run("extremal --m 1 --theta 3.141592653589793").exit_code == 1);
  const RunResult sigma = run("shoot --potential sech2 --bc whole-line --sigma 1");
  CHECK(sigma.exit_code == 1);
  CHECK(sigma.output.find("sigma") != std::string::npos);
  CHECK(run("run missing_scenario_file.json").exit_code == 1);
}

TEST_CASE("numeric failures exit with 2") {
  TempFile report("cli_audit_tmp.json");
  const RunResult r =
      run("audit --potential mollified-delta --c-re 1.5 --c-im 0 --b 0.8 "
          "--width 0.05 --bc neumann --certificate-nodes 2 --out " + report.path);
  CHECK(r.exit_code == 2);
  CHECK(slurp(report.path).find("\"pass\": false") != std::string::npos);
}

TEST_CASE("scenario from stdin") {
  const std::string cmd = "echo '{\"command\":\"keller\",\"gamma\":1.5}' | " +
                          cli_path() + " run - 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(output.find("0.1875") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("audit --help").exit_code == 0);
}

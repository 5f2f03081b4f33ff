// Drives the installed CLI binary end to end; the path arrives in QFN_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("QFN_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> chunk;
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute emits sorted json terms and exit 0") {
  RunResult r = run_cli("compute --kind Q --lambda 1 --vars 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"exponents\":[1,0]") != std::string::npos);
  CHECK(r.out.find("\"coeff_re\":\"2\"") != std::string::npos);
}

TEST_CASE("compute rejects a non-decreasing partition with exit 2") {
  RunResult r = run_cli("compute --kind Q --lambda 1,2 --vars 2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("skew without --mu is a usage error, with --mu works") {
  CHECK(run_cli("compute --kind skew --lambda 2,1 --vars 2").exit_code == 2);
  RunResult r = run_cli("compute --kind skew --lambda 2,1 --mu 1 --vars 2 --format pretty");
  CHECK(r.exit_code == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("output lands in the file given by --out") {
  std::string path = "/tmp/qfn_cli_out_test.json";
  std::remove(path.c_str());
  RunResult r = run_cli("compute --kind Q --lambda 1 --vars 1 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> data{};
  std::size_t got = fread(data.data(), 1, data.size() - 1, f);
  fclose(f);
  REQUIRE(got > 0);
  std::remove(path.c_str());
  CHECK(std::string(data.data()).find("\"terms\"") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --suite schur-pfaffian --vars 2").exit_code == 0);
  CHECK(run_cli("verify --suite unknown").exit_code == 2);
}

TEST_CASE("verify honors size overrides") {
  RunResult r = run_cli("verify --suite cauchy --vars 2 --degree 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cauchy;n=2 d=4;true\n");

  RunResult ns = run_cli("verify --suite ns --vars 1 --yvars 1 --degree 2 --format csv");
  CHECK(ns.exit_code == 0);
  std::size_t lines = 0;
  for (char c : ns.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3); // lambda in {(), (1), (2)} at one (n,k) shape
}

TEST_CASE("table shape and determinism") {
  RunResult a = run_cli("table --degree 3 --vars 2 --format csv");
  CHECK(a.exit_code == 0);
  std::size_t lines = 0;
  for (char c : a.out)
    if (c == '\n') ++lines;
  CHECK(lines == 6); // header + 5 rows

  RunResult b = run_cli("table --degree 3 --vars 2 --format csv");
  CHECK(a.out == b.out);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run_cli("").exit_code == 2);
}

TEST_SUITE_END();

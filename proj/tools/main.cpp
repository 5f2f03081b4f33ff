// Command-line front end; talks to the library through the C API only.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "qfn.h"

namespace {

int emit(qfn_buffer* buf, int status, const std::string& out_path) {
  std::string data = buf ? std::string(qfn_buffer_data(buf), qfn_buffer_size(buf)) : "";
  qfn_buffer_free(buf);
  if (status == QFN_BAD_ARGUMENT || status == QFN_INTERNAL) {
    std::cerr << data;
    return 2;
  }
  if (out_path.empty()) {
    std::cout << data;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    f << data;
  }
  return status == QFN_OK ? 0 : 1;
}

int env_threads() {
  const char* v = std::getenv("QFUN_THREADS");
  if (!v || !*v) return 0;
  long t = std::strtol(v, nullptr, 10);
  return t > 0 ? static_cast<int>(t) : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Pfaffian calculus and Schur P/Q-functions"};
  app.require_subcommand(1);

  std::string kind = "Q", lambda, mu, format = "json", out_path, suite;
  std::string mode = "symbolic";
  int vars = -1, yvars = -1, degree = -1;
  std::uint64_t seed = 1;

  CLI::App* compute = app.add_subcommand("compute", "expand a Schur P/Q or skew Q-function");
  compute->add_option("--kind", kind, "P, Q or skew")->capture_default_str();
  compute->add_option("--lambda", lambda, "partition parts, e.g. 3,2,1");
  compute->add_option("--mu", mu, "inner partition for skew");
  compute->add_option("--vars", vars, "number of x-variables")->required();
  compute->add_option("--format", format, "json, csv or pretty")->capture_default_str();
  compute->add_option("--out", out_path, "write output to a file");

  CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--vars", vars, "override the suite's alphabet sizes");
  verify->add_option("--yvars", yvars, "override the second alphabet sizes");
  verify->add_option("--degree", degree, "override weight/degree bounds");
  verify->add_option("--mode", mode, "symbolic or specialized")->capture_default_str();
  verify->add_option("--seed", seed, "seed for specialized mode")->capture_default_str();
  verify->add_option("--format", format, "json, csv or pretty")->capture_default_str();
  verify->add_option("--out", out_path, "write output to a file");

  CLI::App* table = app.add_subcommand("table", "tabulate Q_lambda by weight");
  table->add_option("--degree", degree, "maximum partition weight")->required();
  table->add_option("--vars", vars, "number of x-variables")->required();
  table->add_option("--format", format, "json, csv or pretty")->capture_default_str();
  table->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  qfn_buffer* buf = nullptr;
  int status = QFN_BAD_ARGUMENT;
  if (compute->parsed()) {
    const char* mu_arg = compute->count("--mu") > 0 ? mu.c_str() : nullptr;
    status = qfn_compute(kind.c_str(), lambda.c_str(), mu_arg, vars < 0 ? 0 : vars,
                         format.c_str(), &buf);
  } else if (verify->parsed()) {
    status = qfn_verify(suite.c_str(), vars, yvars, degree, mode.c_str(), seed, env_threads(),
                        format.c_str(), &buf);
  } else if (table->parsed()) {
    status = qfn_table(degree, vars, format.c_str(), &buf);
  }
  return emit(buf, status, out_path);
}

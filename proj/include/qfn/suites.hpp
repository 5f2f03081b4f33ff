#ifndef QFN_SUITES_HPP
#define QFN_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qfn/identities.hpp"

namespace qfn {

struct SuiteOptions {
  int vars = -1;   // -1: suite defaults
  int yvars = -1;
  int degree = -1;
  bool specialized = false; // seeded rational specialization instead of symbolic
  std::uint64_t seed = 1;
  int threads = 0; // <= 0: one worker per hardware thread
};

std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);

// Runs every instance of the named suite on a worker pool; reports come
// back in deterministic instance order regardless of parallelism.
// Throws InvalidArgument for unknown suite names.
std::vector<IdentityReport> run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace qfn

#endif

// Acceptance suite: runs every verification criterion at exact (zero
// tolerance) equality and prints one pass/fail line per criterion.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "qfn/schur.hpp"
#include "qfn/suites.hpp"

using namespace qfn;

namespace {

int failures = 0;

void criterion(int num, const std::string& text, bool ok) {
  std::printf("[%2d] %s  %s\n", num, ok ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool all_equal(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.equal; });
}

bool suite_ok(const std::string& name) {
  SuiteOptions opts;
  return all_equal(run_suite(name, opts));
}

// swapping any two adjacent variables fixes both P and Q
bool symmetric_under_swaps(const Polynomial& p, const std::vector<unsigned>& vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    std::map<unsigned, Polynomial> swap{{vars[i], Polynomial::variable(vars[i + 1])},
                                        {vars[i + 1], Polynomial::variable(vars[i])}};
    if (p.substitute(swap) != p) return false;
  }
  return true;
}

bool nimmo_with_symmetry() {
  if (!suite_ok("nimmo-polynomiality")) return false;
  for (unsigned n : {2u, 3u, 4u}) {
    std::vector<unsigned> vars = range_vars(0, n);
    for (const StrictPartition& lambda : strict_partitions(8)) {
      if (!symmetric_under_swaps(nimmo_q(lambda, vars), vars)) return false;
      if (!symmetric_under_swaps(nimmo_p(lambda, vars), vars)) return false;
    }
  }
  return true;
}

} // namespace

int main() {
  criterion(1, "alternating-ratio Pfaffian equals the pair product, n in {2,4,6}",
            suite_ok("schur-pfaffian"));
  criterion(2,
            "Laplace-type block expansion, (m,n) in {(1,1),(2,2),(3,1),(2,4)}, "
            "plus both corollary branches",
            suite_ok("laplace") && suite_ok("cbiw"));
  criterion(3,
            "Cauchy-Binet Pfaffian analogue, m=n=2, l in {2,3,4}, variants 1 and 2, "
            "determinant reduction at A=B=O",
            suite_ok("cauchy-binet-1") && suite_ok("cauchy-binet-2"));
  criterion(4,
            "minor-summation Pfaffian analogue, m=2, l in {2,3,4}; A=O reduction; "
            "double-subset form l in {2,3} incl. the -1 instance",
            suite_ok("minor-summation") && suite_ok("iw2"));
  criterion(5, "Sylvester-type quotient identity over the fraction field, (n,l) in {(2,2),(2,4)}",
            suite_ok("sylvester"));
  criterion(6,
            "Pfaffian-quotient polynomiality, 3-method agreement and symmetry, "
            "|lambda| <= 8, n in {2,3,4}",
            nimmo_with_symmetry());
  criterion(7, "pair-matrix definition equals the Pfaffian-quotient definition, "
               "|lambda| <= 6, n in {2,3,4}",
            suite_ok("schur3"));
  criterion(8,
            "one- and two-row generating functions to degree 8, n in {2,3}, "
            "with all stated conventions",
            suite_ok("gen-fn-1") && suite_ok("gen-fn-2"));
  criterion(9, "stability under appending a zero variable, |lambda| <= 6, n in {1,2,3}",
            suite_ok("stability"));
  criterion(10, "Cauchy-type truncated identity, (n,d) in {(1,4),(2,6),(3,4)}",
            suite_ok("cauchy"));
  criterion(11,
            "Littlewood-type identity, (n,d) in {(2,6),(3,4)}; coefficient table "
            "l <= 12; real/imaginary split at n=2, d=4",
            suite_ok("littlewood") && suite_ok("littlewood-coeffs"));
  criterion(12,
            "skew Pfaffian formula, interpolation identity, split-alphabet "
            "expansion and support guard, |lambda| <= 6, n,k in {1,2}",
            suite_ok("pjn") && suite_ok("ns") && suite_ok("skew-expansion"));
  criterion(13, "index-set bijection: injectivity and parity on weight <= 8, n in {1,2}",
            suite_ok("bijection"));

  if (failures == 0)
    std::printf("acceptance: 13/13 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}

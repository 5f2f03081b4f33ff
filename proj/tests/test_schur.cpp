#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qfn/error.hpp"
#include "qfn/schur.hpp"
#include "qfn/text.hpp"

using namespace qfn;

namespace {

Polynomial var(unsigned v, unsigned e = 1) { return Polynomial::variable(v, e); }

StrictPartition sp(std::vector<unsigned> parts) { return StrictPartition(std::move(parts)); }

// distinct-part partition counter, independent of the generator
std::vector<unsigned long> distinct_part_counts(unsigned max_weight) {
  std::vector<unsigned long> dp(max_weight + 1, 0);
  dp[0] = 1;
  for (unsigned part = 1; part <= max_weight; ++part)
    for (unsigned w = max_weight; w >= part; --w) dp[w] += dp[w - part];
  return dp;
}

} // namespace

TEST_SUITE_BEGIN("schur-q");

TEST_CASE("chi") {
  CHECK(chi(0) == 1);
  CHECK(chi(1) == 2);
  CHECK(chi(5) == 2);
}

TEST_CASE("strict partitions validate and enumerate") {
  CHECK_THROWS_AS(sp({1, 2}), Error);
  CHECK_THROWS_AS(sp({2, 2}), Error);
  CHECK_THROWS_AS(sp({2, 0}), Error);
  CHECK(sp({3, 1}).weight() == 4);
  CHECK(sp({3, 2, 1}).contains(sp({2, 1})));
  CHECK(!sp({3, 1}).contains(sp({3, 2})));
  CHECK(!sp({2}).contains(sp({2, 1})));

  auto list = strict_partitions(3);
  REQUIRE(list.size() == 5);
  CHECK(list[0] == StrictPartition());
  CHECK(list[1] == sp({1}));
  CHECK(list[2] == sp({2}));
  CHECK(list[3] == sp({3}));
  CHECK(list[4] == sp({2, 1}));

  CHECK(strict_partitions(0).size() == 1);
  CHECK(strict_partitions(6).size() == 14);

  auto dp = distinct_part_counts(8);
  unsigned long total = 0;
  for (unsigned w = 0; w <= 8; ++w) total += dp[w];
  CHECK(strict_partitions(8).size() == total);

  CHECK(StrictPartition::parse("3,2,1").has_value());
  CHECK(!StrictPartition::parse("1,2").has_value());
  CHECK(!StrictPartition::parse("a").has_value());
  CHECK(StrictPartition::parse("")->length() == 0);
}

TEST_CASE("nimmo matrix construction and padding") {
  SUBCASE("odd n+l pads with a zero part") {
    NimmoMatrices m = build_nimmo_matrices(sp({2}), range_vars(0, 2));
    CHECK(m.alpha == std::vector<unsigned>{2, 0});
    // the zero-exponent column is all ones, chi(0) = 1
    CHECK(m.w.at(0, 1) == RationalFunction(1));
    CHECK(m.w.at(1, 1) == RationalFunction(1));
    CHECK(m.w.at(0, 0) == RationalFunction(GaussianRational(2) * var(0, 2)));
  }
  SUBCASE("even n+l stays unpadded") {
    NimmoMatrices m = build_nimmo_matrices(sp({3, 1}), range_vars(0, 2));
    CHECK(m.alpha == std::vector<unsigned>{3, 1});
    CHECK(m.v.at(1, 0) == RationalFunction(var(1, 3)));
  }
  SUBCASE("parity forces padding for n=3") {
    // n + l = 3 + 1 is even, so (1) stays unpadded; (2,1) gains the zero
    CHECK(build_nimmo_matrices(sp({1}), range_vars(0, 3)).alpha == std::vector<unsigned>{1});
    CHECK(build_nimmo_matrices(sp({2, 1}), range_vars(0, 3)).alpha ==
          std::vector<unsigned>{2, 1, 0});
  }
}

TEST_CASE("nimmo values against the generating-function oracle") {
  std::vector<unsigned> x2 = range_vars(0, 2);
  Polynomial q1 = nimmo_q(sp({1}), x2);
  CHECK(q1 == GaussianRational(2) * var(0) + GaussianRational(2) * var(1));
  CHECK(q1 == q_row_series(1, x2)[1]);

  Polynomial q2 = nimmo_q(sp({2}), x2);
  CHECK(q2 == GaussianRational(2) * var(0, 2) + GaussianRational(4) * (var(0) * var(1)) +
                  GaussianRational(2) * var(1, 2));

  CHECK(nimmo_q(sp({2, 1}), range_vars(0, 1)).is_zero());
  CHECK(nimmo_q(StrictPartition(), x2) == Polynomial(1));
  CHECK(nimmo_p(sp({1}), x2) == var(0) + var(1));
  CHECK(nimmo_p(sp({2, 1}), range_vars(0, 1)).is_zero());
}

TEST_CASE("one-row generating function matches nimmo through degree 6") {
  for (unsigned n : {2u, 3u}) {
    std::vector<unsigned> vars = range_vars(0, n);
    auto rows = q_row_series(6, vars);
    CHECK(rows[0] == Polynomial(1));
    for (unsigned r = 1; r <= 6; ++r) CHECK(rows[r] == nimmo_q(sp({r}), vars));
  }
}

TEST_CASE("two-row conventions and cross-oracle") {
  std::vector<unsigned> x2 = range_vars(0, 2);
  QTable table(x2);
  CHECK(table.pair(0, 0).is_zero());
  for (unsigned r = 1; r <= 5; ++r) {
    CHECK(table.pair(r, 0) == table.row(r));
    CHECK(table.pair(0, r) == -table.row(r));
  }
  for (unsigned r = 0; r <= 5; ++r)
    for (unsigned s = 0; s <= 5; ++s) CHECK(table.pair(r, s) == -table.pair(s, r));
  CHECK(table.pair(2, 1) == nimmo_q(sp({2, 1}), x2));
  CHECK(table.pair(3, 2) == nimmo_q(sp({3, 2}), x2));
  CHECK(q_pair(2, 1, x2) == nimmo_q(sp({2, 1}), x2));
}

TEST_CASE("pair matrix definition agrees with nimmo") {
  for (unsigned n : {2u, 3u}) {
    std::vector<unsigned> vars = range_vars(0, n);
    SUBCASE("two rows: single pfaffian entry") {
      CHECK(schur_def_q(sp({2, 1}), vars) == q_pair(2, 1, vars));
    }
    SUBCASE("one row: the zero part supplies the partner") {
      CHECK(schur_def_q(sp({3}), vars) == q_pair(3, 0, vars));
      CHECK(schur_def_q(sp({3}), vars) == nimmo_q(sp({3}), vars));
    }
  }
  CHECK(schur_def_q(sp({3, 2, 1}), range_vars(0, 3)) == nimmo_q(sp({3, 2, 1}), range_vars(0, 3)));
}

TEST_CASE("q-functions are symmetric and have real coefficients") {
  for (unsigned n : {2u, 3u}) {
    std::vector<unsigned> vars = range_vars(0, n);
    for (const StrictPartition& lambda : strict_partitions(4)) {
      Polynomial q = nimmo_q(lambda, vars);
      Polynomial p = nimmo_p(lambda, vars);
      // swap the first two variables
      std::map<unsigned, Polynomial> swap{{vars[0], var(vars[1])}, {vars[1], var(vars[0])}};
      CHECK(q.substitute(swap) == q);
      CHECK(p.substitute(swap) == p);
      for (const auto& [m, c] : q.terms()) CHECK(c.is_real());
    }
  }
}

TEST_CASE("index set of the bijection lemma") {
  CHECK(nimmo_index_set(sp({3, 1}), 2) == std::vector<unsigned>{1, 3});
  CHECK(nimmo_index_set(sp({2}), 2) == std::vector<unsigned>{0, 2});
  CHECK(nimmo_index_set(StrictPartition(), 2).empty());
  for (unsigned n : {1u, 2u}) {
    auto partitions = strict_partitions(8);
    std::set<std::vector<unsigned>> images;
    for (const StrictPartition& p : partitions) {
      auto img = nimmo_index_set(p, n);
      CHECK(img.size() % 2 == n % 2);
      images.insert(img);
    }
    CHECK(images.size() == partitions.size());
  }
}

TEST_CASE("cauchy identity small instances") {
  IdentityReport tiny = cauchy_check(2, 1);
  CHECK(tiny.equal);
  CHECK(tiny.lhs == RationalFunction(1)); // first nonconstant term has degree 2

  IdentityReport small = cauchy_check(1, 2);
  CHECK(small.equal);
  Polynomial expect = Polynomial(1) + GaussianRational(2) * (var(0) * var(1));
  CHECK(small.lhs == RationalFunction(expect));

  CHECK(cauchy_check(2, 4).equal);
}

TEST_CASE("littlewood identity small instances") {
  IdentityReport d0 = littlewood_check(2, 0);
  CHECK(d0.equal);
  CHECK(d0.lhs == RationalFunction(1));

  IdentityReport n1 = littlewood_check(1, 3);
  CHECK(n1.equal);
  GaussianRational a(mpq_class(1), mpq_class(1)); // 1 + i
  Polynomial expect = Polynomial(1);
  for (unsigned r = 1; r <= 3; ++r) expect += Polynomial(a) * var(0, r);
  CHECK(n1.lhs == RationalFunction(expect));

  CHECK(littlewood_split_check(2, 4, false).equal);
  CHECK(littlewood_split_check(2, 4, true).equal);
}

TEST_CASE("littlewood coefficient table") {
  CHECK(littlewood_coeffs(0) == std::make_pair(GaussianRational(1), GaussianRational(0)));
  CHECK(littlewood_coeffs(2) == std::make_pair(GaussianRational(0), GaussianRational(2)));
  CHECK(littlewood_coeffs(3) == std::make_pair(GaussianRational(-2), GaussianRational(2)));
  GaussianRational alpha(mpq_class(1), mpq_class(1));
  for (unsigned l = 0; l <= 12; ++l) {
    auto [a, b] = littlewood_coeffs(l);
    CHECK(a + b * GaussianRational::i() == alpha.pow(l));
  }
}

TEST_CASE("skew q-functions") {
  std::vector<unsigned> x2 = range_vars(0, 2);
  SUBCASE("empty inner partition recovers the straight function") {
    CHECK(skew_q(sp({3, 1}), StrictPartition(), x2) == nimmo_q(sp({3, 1}), x2));
    CHECK(skew_q(sp({2}), StrictPartition(), x2) == nimmo_q(sp({2}), x2));
  }
  SUBCASE("lambda over lambda is one") {
    CHECK(skew_q(sp({3, 1}), sp({3, 1}), x2) == Polynomial(1));
    CHECK(skew_q(sp({2, 1}), sp({2, 1}), x2) == Polynomial(1));
    CHECK(skew_q(StrictPartition(), StrictPartition(), x2) == Polynomial(1));
  }
  SUBCASE("projection oracle agrees for a mixed instance") {
    for (unsigned k : {1u, 2u}) {
      CHECK(skew_q(sp({2, 1}), sp({1}), x2) == skew_q_from_expansion(sp({2, 1}), sp({1}), x2, k));
      CHECK(skew_q(sp({3, 1}), sp({2}), x2) == skew_q_from_expansion(sp({3, 1}), sp({2}), x2, k));
    }
  }
  SUBCASE("support vanishes outside weight and width bounds") {
    CHECK(skew_q(sp({2, 1}), sp({4}), x2).is_zero());
    CHECK(skew_q(sp({2, 1}), sp({3, 2}), x2).is_zero());
    CHECK(skew_q(sp({2}), sp({2, 1}), x2).is_zero());
  }
}

TEST_CASE("interpolating identity and its reductions") {
  CHECK(ns_check(sp({2, 1}), range_vars(0, 1), range_vars(1, 1)).equal);
  CHECK(ns_check(sp({3, 1}), range_vars(0, 2), range_vars(2, 2)).equal);
  SUBCASE("no x-variables reduces to the pfaffian quotient definition") {
    IdentityReport rep = ns_check(sp({2, 1}), {}, range_vars(0, 2));
    CHECK(rep.equal);
    CHECK(rep.rhs == RationalFunction(nimmo_q(sp({2, 1}), range_vars(0, 2))));
  }
  SUBCASE("no y-variables reduces to the pair-matrix definition") {
    IdentityReport rep = ns_check(sp({2, 1}), range_vars(0, 2), {});
    CHECK(rep.equal);
    CHECK(rep.lhs == RationalFunction(schur_def_q(sp({2, 1}), range_vars(0, 2))));
  }
}

TEST_CASE("skew expansion over a split alphabet") {
  IdentityReport one = skew_expansion_check(sp({1}), 1, 1);
  CHECK(one.equal);
  // Q_{(1)}(x,y) = Q_{(1)/()}(x) + Q_{(1)/(1)}(x) Q_{(1)}(y), written out
  std::vector<unsigned> x1 = range_vars(0, 1);
  Polynomial direct = skew_q(sp({1}), StrictPartition(), x1) +
                      skew_q(sp({1}), sp({1}), x1) * nimmo_q(sp({1}), range_vars(1, 1));
  CHECK(one.lhs == RationalFunction(direct));

  CHECK(skew_expansion_check(sp({2, 1}), 1, 1).equal);
  CHECK(skew_expansion_check(sp({3, 1}), 2, 1).equal);
}

TEST_CASE("stability under appending a zero variable") {
  IdentityReport rep = stability_check(sp({1}), 2);
  CHECK(rep.equal);
  CHECK(rep.rhs == RationalFunction(GaussianRational(2) * var(0) + GaussianRational(2) * var(1)));
  CHECK(stability_check(StrictPartition(), 1).equal);
  CHECK(stability_check(sp({3, 2, 1}), 3).equal);
}

TEST_CASE("alternating-ratio alphabet extension route for odd n") {
  // bordered matrices whose Sylvester quotients reproduce the pair-matrix
  // identity when the alphabet has odd size
  std::vector<unsigned> x3 = range_vars(0, 3);
  unsigned n = 3;

  SUBCASE("even length: lambda = (2,1)") {
    StrictPartition lambda = sp({2, 1});
    unsigned l = 2;
    SkewMatrix x(n + 1 + l);
    NimmoMatrices mats = build_nimmo_matrices(StrictPartition(), x3); // A(x) and the ones column
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) x.set_upper(i, j, mats.a.upper(i, j));
    for (unsigned i = 0; i < n; ++i) x.set_upper(i, n, RationalFunction(1));
    for (unsigned i = 0; i < n; ++i) {
      x.set_upper(i, n + 1, RationalFunction(GaussianRational(2) * var(i, 2)));
      x.set_upper(i, n + 2, RationalFunction(GaussianRational(2) * var(i)));
    }
    IdentityReport rep = sylvester_check(x, n + 1, SylvesterVariant::PivotFirst);
    CHECK(rep.equal);
    RationalFunction pivot = sub_pfaffian(x, IndexSet(6, {1, 2, 3, 4}));
    CHECK(pivot == alternant(x3));
    CHECK(pfaffian(x) == alternant(x3) * RationalFunction(nimmo_q(lambda, x3)));
    CHECK(rep.rhs == RationalFunction(nimmo_q(lambda, x3)));
    CHECK(rep.lhs == RationalFunction(q_pair(2, 1, x3)));
  }
}

TEST_SUITE_END();

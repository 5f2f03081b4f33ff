#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfn/error.hpp"
#include "qfn/schur.hpp"
#include "qfn/series.hpp"
#include "qfn/text.hpp"

using namespace qfn;

namespace {

Polynomial var(unsigned v, unsigned e = 1) { return Polynomial::variable(v, e); }

Polynomial random_poly(std::mt19937_64& rng, unsigned max_vars = 3, unsigned max_terms = 4) {
  Polynomial p;
  unsigned terms = rng() % (max_terms + 1);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    for (unsigned v = 0; v < max_vars; ++v)
      if (rng() % 2) m = m * Monomial::variable(v, 1 + rng() % 3);
    long re = static_cast<long>(rng() % 11) - 5;
    long im = (rng() % 4 == 0) ? static_cast<long>(rng() % 5) - 2 : 0;
    p += Polynomial::term(m, GaussianRational(mpq_class(re), mpq_class(im)));
  }
  return p;
}

RationalFunction random_expandable(std::mt19937_64& rng) {
  Polynomial den = random_poly(rng);
  den += Polynomial(GaussianRational(1 + static_cast<long>(rng() % 3)));
  return RationalFunction(random_poly(rng), den);
}

} // namespace

TEST_SUITE_BEGIN("exact-algebra");

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
  CHECK(i * i == GaussianRational(-1));
  CHECK(GaussianRational::ratio(2, 4) == GaussianRational::ratio(1, 2));
  CHECK(GaussianRational::ratio(1, -2) == GaussianRational::ratio(-1, 2));
  GaussianRational x(mpq_class(3, 4), mpq_class(-2, 5));
  CHECK(x * x.inverse() == GaussianRational(1));
  CHECK((GaussianRational(1) + i).pow(4) == GaussianRational(-4));
  CHECK_THROWS_AS(GaussianRational().inverse(), Error);
  CHECK(GaussianRational::parse("2/6", "-1") == GaussianRational(mpq_class(1, 3), mpq_class(-1)));
}

TEST_CASE("grevlex order") {
  Monomial x1sq = Monomial::variable(0, 2);
  Monomial x1x2 = Monomial::variable(0) * Monomial::variable(1);
  Monomial x2sq = Monomial::variable(1, 2);
  CHECK(grevlex_compare(x1sq, x1x2) > 0);
  CHECK(grevlex_compare(x1x2, x2sq) > 0);
  CHECK(grevlex_compare(x2sq, x1sq) < 0);
  CHECK(grevlex_compare(x1sq, Monomial::variable(0)) > 0); // degree first
  CHECK(grevlex_compare(x1x2, x1x2) == 0);
  CHECK(*x1x2.divided_by(Monomial::variable(1)) == Monomial::variable(0));
  CHECK(!x1sq.divided_by(Monomial::variable(1)).has_value());
  CHECK(x1sq.gcd(x1x2) == Monomial::variable(0));
}

TEST_CASE("polynomial arithmetic examples") {
  Polynomial s = var(0) + var(1);
  Polynomial sq = s * s;
  CHECK(sq == var(0, 2) + GaussianRational(2) * (var(0) * var(1)) + var(1, 2));
  CHECK((sq * Polynomial()).is_zero());
  Polynomial gi = Polynomial(GaussianRational(1) + GaussianRational::i()) *
                  Polynomial(GaussianRational(1) - GaussianRational::i());
  CHECK(gi == Polynomial(GaussianRational(2)));
  CHECK(to_string(sq) == "x1^2 + 2*x1*x2 + x2^2");
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division") {
  Polynomial a = var(0) + var(1);
  Polynomial b = var(0) - var(1);
  Polynomial prod = a * b * a;
  auto q = prod.divided_by(a);
  REQUIRE(q.has_value());
  CHECK(*q == a * b);
  CHECK(!(var(0, 2) + Polynomial(1)).divided_by(a).has_value());
  CHECK_THROWS_AS(a.divided_by(Polynomial()), Error);
}

TEST_CASE("substitution") {
  Polynomial p = var(0, 2) + var(1);
  CHECK(p.substitute({{1, Polynomial()}}) == var(0, 2));
  CHECK(var(0).substitute({{0, var(0)}}) == var(0));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    std::map<unsigned, Polynomial> images{{0, random_poly(rng)}, {2, random_poly(rng)}};
    CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
  }
}

TEST_CASE("rational function basics") {
  RationalFunction lhs(var(1) - var(0), var(1) + var(0));
  RationalFunction rhs(var(0) - var(1), var(0) + var(1));
  CHECK((lhs + rhs).is_zero());

  RationalFunction ab(var(0), var(1));
  CHECK((ab * ab.reciprocal()).is_one());

  RationalFunction norm(GaussianRational(2) * var(0), GaussianRational(2) * var(1));
  CHECK(norm.num() == var(0));
  CHECK(norm.den() == var(1));

  CHECK_THROWS_AS(RationalFunction(var(0), Polynomial()), Error);
  CHECK_THROWS_AS(lhs / RationalFunction(), Error);
}

TEST_CASE("rational function equality agrees with cross-multiplication") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial na = random_poly(rng), nb = random_poly(rng);
    Polynomial da = random_poly(rng) + Polynomial(1);
    Polynomial db = random_poly(rng) + Polynomial(1);
    if (da.is_zero() || db.is_zero()) continue;
    RationalFunction a(na, da), b(nb, db);
    CHECK((a == b) == (na * db == nb * da));
    // scaled copies always compare equal
    Polynomial s = random_poly(rng) + Polynomial(2);
    RationalFunction scaled(na * s, da * s);
    CHECK(a == scaled);
  }
}

TEST_CASE("rational function substitution guards the denominator") {
  RationalFunction f(Polynomial(1), var(0) + var(1));
  CHECK_THROWS_AS(f.substitute({{0, -var(1)}}), Error);
  RationalFunction g = f.substitute({{0, var(2)}});
  CHECK(g == RationalFunction(Polynomial(1), var(2) + var(1)));
}

TEST_CASE("series expansion examples") {
  // (1 + x z)/(1 - x z) through z-degree 3; every term has x-deg = z-deg
  Polynomial xz = var(0) * var(1);
  RationalFunction f(Polynomial(1) + xz, Polynomial(1) - xz);
  TruncatedSeries s = series_expand(f, 6);
  Polynomial expect = Polynomial(1);
  for (unsigned r = 1; r <= 3; ++r)
    expect += GaussianRational(2) * Polynomial::term(Monomial::variable(0, r) * Monomial::variable(1, r),
                                                     GaussianRational(1));
  CHECK(s.poly() == expect);

  RationalFunction geo(Polynomial(1), Polynomial(1) - var(0) * var(1));
  CHECK(series_expand(geo, 2).poly() == Polynomial(1) + var(0) * var(1));

  RationalFunction pole(var(0) - var(1), var(0) + var(1));
  CHECK_THROWS_AS(series_expand(pole, 3), Error);
}

TEST_CASE("series expansion is multiplicative") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction f = random_expandable(rng);
    RationalFunction g = random_expandable(rng);
    unsigned d = 4;
    TruncatedSeries lhs = series_expand(f * g, d);
    TruncatedSeries rhs = series_expand(f, d) * series_expand(g, d);
    CHECK(lhs.poly() == rhs.poly());
  }
}

TEST_CASE("series arithmetic re-truncates to the minimum bound") {
  TruncatedSeries a(var(0, 3) + var(0), 5);
  TruncatedSeries b(var(0, 2), 2);
  CHECK((a * b).bound() == 2);
  CHECK((a * b).poly().is_zero());
  CHECK((a + b).poly() == var(0) + var(0, 2));
}

TEST_CASE("canonical text") {
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(-var(0) + Polynomial(1)) == "-x1 + 1");
  Polynomial p = Polynomial(GaussianRational::i()) * var(0) + Polynomial(GaussianRational(mpq_class(1, 2)));
  CHECK(to_string(p) == "i*x1 + 1/2");
  RationalFunction f(var(1), var(0) + var(1));
  CHECK(to_string(f) == "(x2)/(x1 + x2)");
}

TEST_CASE("variable map lays out disjoint alphabets") {
  VariableMap vm(2, 3);
  CHECK(vm.x(1) == 0);
  CHECK(vm.y(1) == 2);
  CHECK(vm.z() == 5);
  CHECK(vm.w() == 6);
  CHECK(vm.name(0) == "x1");
  CHECK(vm.name(3) == "y2");
  CHECK(vm.name(vm.z()) == "z");
  CHECK(vm.name(vm.w()) == "w");
  CHECK(vm.xy_indices().size() == 5);
  Polynomial p = var(vm.y(1)) * var(vm.z());
  CHECK(to_string(p, &vm) == "y1*z");
}

TEST_SUITE_END();

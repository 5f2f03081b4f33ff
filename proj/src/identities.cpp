#include "qfn/identities.hpp"

#include "qfn/error.hpp"

namespace qfn {

namespace {

unsigned long choose2(unsigned long a) { return a * (a > 0 ? a - 1 : 0) / 2; }

int parity_sign(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

IdentityReport make_report(std::string name, std::string params, RationalFunction lhs,
                           RationalFunction rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

int epsilon_sign(const IndexSet& i, const IndexSet& j, unsigned m, unsigned n) {
  if (i.size() % 2 != 0 || j.size() % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "index sets must have even size");
  if (i.size() > m || j.size() > n || m - i.size() != n - j.size())
    throw Error(ErrorKind::ParityViolation, "deficits m-|I| and n-|J| must agree");
  unsigned long k = m - i.size();
  unsigned long e = i.sigma() + j.sigma() + choose2(m) + choose2(n) + choose2(k);
  return parity_sign(e);
}

IdentityReport laplace_expand(const SkewMatrix& z, const SkewMatrix& zp, const RectMatrix& w) {
  unsigned m = static_cast<unsigned>(z.size());
  unsigned n = static_cast<unsigned>(zp.size());
  if ((m + n) % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "block order m+n must be even");
  if (w.rows() != m || w.cols() != n)
    throw Error(ErrorKind::ShapeMismatch, "coupling block must be m x n");

  RationalFunction lhs = pfaffian(block_skew(z, w, zp));
  RationalFunction rhs;
  for (const IndexSet& i : even_subsets(m)) {
    unsigned k = m - static_cast<unsigned>(i.size());
    if (k > n) continue;
    for (const IndexSet& j : even_subsets(n)) {
      if (n - j.size() != k) continue;
      RationalFunction term = sub_pfaffian(z, i) * sub_pfaffian(zp, j) *
                              minor_det(w, i.complement(), j.complement());
      int sign = epsilon_sign(i, j, m, n);
      rhs += sign > 0 ? term : -term;
    }
  }
  return make_report("laplace", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                     std::move(lhs), std::move(rhs));
}

RectMatrix corner_identity_block(unsigned m, unsigned n, unsigned l) {
  RectMatrix e(m + l, n + l);
  for (unsigned k = 0; k < l; ++k) e.at(m + k, n + k) = RationalFunction(1);
  return e;
}

IdentityReport cbiw_sum(const SkewMatrix& z, const SkewMatrix& zp, unsigned m, unsigned n,
                        unsigned l) {
  if (z.size() != m + l || zp.size() != n + l)
    throw Error(ErrorKind::ShapeMismatch, "blocks must have orders m+l and n+l");
  if (m % 2 != n % 2)
    throw Error(ErrorKind::ParityViolation, "m and n must have the same parity");

  RationalFunction lhs = pfaffian(block_skew(z, corner_identity_block(m, n, l), zp));
  RationalFunction rhs;
  for (const IndexSet& k : subsets_with_parity(l, m % 2)) {
    IndexSet zi = IndexSet::full(m).shifted(0, m + l).unioned(k.shifted(m, m + l));
    IndexSet zpj = IndexSet::full(n).shifted(0, n + l).unioned(k.shifted(n, n + l));
    RationalFunction term = sub_pfaffian(z, zi) * sub_pfaffian(zp, zpj);
    int sign = parity_sign(choose2(l - k.size()));
    rhs += sign > 0 ? term : -term;
  }
  return make_report("cbiw",
                     "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " l=" + std::to_string(l),
                     std::move(lhs), std::move(rhs));
}

SkewMatrix bordered_skew(const SkewMatrix& a, const RectMatrix& s_cols) {
  return block_skew(a, s_cols, SkewMatrix(s_cols.cols()));
}

IdentityReport cauchy_binet_pf(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& s,
                               const RectMatrix& t, CauchyBinetVariant variant) {
  unsigned m = static_cast<unsigned>(a.size());
  unsigned n = static_cast<unsigned>(b.size());
  if (s.rows() != m || t.rows() != n || s.cols() != t.cols())
    throw Error(ErrorKind::ShapeMismatch, "factor shapes must be m x l and n x l");
  if (m % 2 != n % 2)
    throw Error(ErrorKind::ParityViolation, "m and n must have the same parity");
  unsigned l = static_cast<unsigned>(s.cols());

  RationalFunction lhs;
  for (const IndexSet& k : subsets_with_parity(l, m % 2)) {
    RationalFunction term = pfaffian(bordered_skew(a, s.select_columns(k))) *
                            pfaffian(bordered_skew(b, t.select_columns(k)));
    if (variant == CauchyBinetVariant::CB1 && parity_sign(choose2(k.size())) < 0)
      lhs -= term;
    else
      lhs += term;
  }

  RectMatrix st = s * t.transpose();
  RationalFunction rhs;
  if (variant == CauchyBinetVariant::CB1) {
    rhs = pfaffian(block_skew(a, st, b));
  } else {
    rhs = pfaffian(block_skew(a, st, b.negated()));
    if (parity_sign(choose2(n)) < 0) rhs = -rhs;
  }
  return make_report(variant == CauchyBinetVariant::CB1 ? "cauchy-binet-1" : "cauchy-binet-2",
                     "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " l=" + std::to_string(l),
                     std::move(lhs), std::move(rhs));
}

IdentityReport minor_summation_pf(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& s) {
  unsigned m = static_cast<unsigned>(a.size());
  unsigned l = static_cast<unsigned>(b.size());
  if (m % 2 != 0) throw Error(ErrorKind::ParityViolation, "m must be even");
  if (s.rows() != m || s.cols() != l)
    throw Error(ErrorKind::ShapeMismatch, "weight matrix must be m x l");

  RationalFunction lhs;
  for (const IndexSet& k : even_subsets(l))
    lhs += sub_pfaffian(b, k) * pfaffian(bordered_skew(a, s.select_columns(k)));

  RectMatrix sbs = s * b.to_rect() * s.transpose();
  RationalFunction rhs = pfaffian(SkewMatrix::from_full(a.to_rect() - sbs));
  return make_report("minor-summation", "m=" + std::to_string(m) + " l=" + std::to_string(l),
                     std::move(lhs), std::move(rhs));
}

IdentityReport iw2_sum(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& t) {
  unsigned l = static_cast<unsigned>(a.size());
  if (b.size() != l || t.rows() != l || t.cols() != l)
    throw Error(ErrorKind::ShapeMismatch, "all blocks must be l x l");

  RationalFunction lhs;
  for (const IndexSet& i : even_subsets(l)) {
    RationalFunction pa = sub_pfaffian(a, i);
    if (pa.is_zero()) continue;
    for (const IndexSet& j : even_subsets(l)) {
      if (j.size() != i.size()) continue;
      RationalFunction term = minor_det(t, i, j) * pa * sub_pfaffian(b, j);
      int sign = parity_sign(choose2(l - i.size()));
      lhs += sign > 0 ? term : -term;
    }
  }

  RectMatrix tbt = t * b.to_rect() * t.transpose();
  RationalFunction rhs =
      pfaffian(block_skew(a, RectMatrix::identity(l), SkewMatrix::from_full(tbt)));
  return make_report("iw2", "l=" + std::to_string(l), std::move(lhs), std::move(rhs));
}

IdentityReport sylvester_check(const SkewMatrix& x, unsigned n, SylvesterVariant variant) {
  unsigned total = static_cast<unsigned>(x.size());
  if (n > total) throw Error(ErrorKind::ShapeMismatch, "pivot block larger than the matrix");
  unsigned l = total - n;
  if (n % 2 != 0 || l % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "pivot and quotient orders must be even");

  std::vector<unsigned> pivot_elems;
  unsigned offset; // quotient index i maps to row offset + i
  if (variant == SylvesterVariant::PivotFirst) {
    for (unsigned e = 1; e <= n; ++e) pivot_elems.push_back(e);
    offset = n;
  } else {
    for (unsigned e = l + 1; e <= l + n; ++e) pivot_elems.push_back(e);
    offset = 0;
  }
  IndexSet pivot_set(total, pivot_elems);
  RationalFunction pivot = sub_pfaffian(x, pivot_set);
  if (pivot.is_zero())
    throw Error(ErrorKind::ZeroPivot, "pivot subpfaffian is identically zero");

  SkewMatrix quotient(l);
  for (unsigned i = 1; i <= l; ++i)
    for (unsigned j = i + 1; j <= l; ++j) {
      IndexSet rows = pivot_set.unioned(IndexSet(total, {offset + i, offset + j}));
      quotient.set_upper(i - 1, j - 1, sub_pfaffian(x, rows) / pivot);
    }

  RationalFunction lhs = pfaffian(quotient);
  RationalFunction rhs = pfaffian(x) / pivot;
  return make_report("sylvester",
                     "n=" + std::to_string(n) + " l=" + std::to_string(l) +
                         (variant == SylvesterVariant::PivotFirst ? " pivot-first" : " pivot-last"),
                     std::move(lhs), std::move(rhs));
}

RationalFunction schur_entry(const RationalFunction& a, const RationalFunction& b) {
  return (b - a) / (b + a);
}

IdentityReport schur_pfaffian_check(const std::vector<RationalFunction>& alphabet) {
  if (alphabet.size() % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "alphabet size must be even");
  std::size_t n = alphabet.size();
  SkewMatrix a(n);
  RationalFunction rhs(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalFunction e = schur_entry(alphabet[i], alphabet[j]);
      a.set_upper(i, j, e);
      rhs *= e;
    }
  return make_report("schur-pfaffian", "n=" + std::to_string(n), pfaffian(a), std::move(rhs));
}

} // namespace qfn

#include "qfn/series.hpp"

#include <algorithm>

#include "qfn/error.hpp"

namespace qfn {

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  unsigned bound = std::min(a.bound_, b.bound_);
  return TruncatedSeries(a.poly_ + b.poly_, bound);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  unsigned bound = std::min(a.bound_, b.bound_);
  return TruncatedSeries(a.poly_ - b.poly_, bound);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  unsigned bound = std::min(a.bound_, b.bound_);
  return TruncatedSeries(mul_truncated(a.poly_, b.poly_, bound), bound);
}

TruncatedSeries series_inverse(const Polynomial& g, unsigned bound) {
  GaussianRational c = g.constant_term();
  if (c.is_zero())
    throw Error(ErrorKind::NotExpandable, "denominator vanishes at the origin");
  // 1/g = (1/c) * sum_k B^k with B = (c - g)/c, which has no constant term.
  Polynomial b = (Polynomial(c) - g).divided_by_scalar(c).truncate(bound);
  Polynomial acc(GaussianRational(1));
  Polynomial p(GaussianRational(1));
  for (unsigned k = 1; k <= bound; ++k) {
    p = mul_truncated(p, b, bound);
    if (p.is_zero()) break;
    acc += p;
  }
  return TruncatedSeries(acc.divided_by_scalar(c), bound);
}

TruncatedSeries series_expand(const RationalFunction& f, unsigned bound) {
  for (const auto& [g, mult] : f.den_factors())
    if (g.constant_term().is_zero())
      throw Error(ErrorKind::NotExpandable, "denominator vanishes at the origin");
  TruncatedSeries out(f.num(), bound);
  for (const auto& [g, mult] : f.den_factors()) {
    TruncatedSeries inv = series_inverse(g, bound);
    for (unsigned k = 0; k < mult; ++k) out *= inv;
  }
  return out;
}

} // namespace qfn

#ifndef QFN_SERIES_HPP
#define QFN_SERIES_HPP

#include "qfn/rational_function.hpp"

namespace qfn {

// Formal power series kept exactly up to a total-degree bound.
// Arithmetic re-truncates to the minimum bound of the operands.
class TruncatedSeries {
public:
  TruncatedSeries(Polynomial p, unsigned bound)
      : poly_(p.truncate(bound)), bound_(bound) {}

  static TruncatedSeries one(unsigned bound) {
    return TruncatedSeries(Polynomial(GaussianRational(1)), bound);
  }

  const Polynomial& poly() const { return poly_; }
  unsigned bound() const { return bound_; }

  TruncatedSeries operator-() const { return TruncatedSeries(-poly_, bound_); }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  Polynomial coefficient_of(unsigned v, unsigned e) const { return poly_.coefficient_of(v, e); }

  bool operator==(const TruncatedSeries& o) const {
    return bound_ == o.bound_ && poly_ == o.poly_;
  }

private:
  TruncatedSeries() : bound_(0) {}
  Polynomial poly_;
  unsigned bound_;
};

// Unique power-series expansion of f at the origin, truncated to total
// degree `bound`. Throws NotExpandable when den(f) vanishes at the origin.
TruncatedSeries series_expand(const RationalFunction& f, unsigned bound);

// Truncated inverse of a polynomial with nonzero constant term.
TruncatedSeries series_inverse(const Polynomial& g, unsigned bound);

} // namespace qfn

#endif

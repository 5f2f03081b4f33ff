#ifndef QFN_RATIONAL_FUNCTION_HPP
#define QFN_RATIONAL_FUNCTION_HPP

#include <map>

#include "qfn/polynomial.hpp"

namespace qfn {

// Exact element of the fraction field of the polynomial ring.
// The denominator is held as a multiset of monic non-constant factors, so
// cancellations discovered by exact trial division keep results reduced;
// equality never depends on that reduction (it cross-multiplies).
class RationalFunction {
public:
  using DenFactors = std::map<Polynomial, unsigned, PolynomialLess>;

  RationalFunction() = default; // zero
  RationalFunction(Polynomial p) : num_(std::move(p)) {}
  RationalFunction(const GaussianRational& c) : num_(c) {}
  RationalFunction(long c) : num_(GaussianRational(c)) {}
  RationalFunction(Polynomial num, const Polynomial& den);

  static RationalFunction variable(unsigned v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  Polynomial den() const; // materialized product, monic under grevlex
  const DenFactors& den_factors() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_one() const { return den_.empty() && num_.is_one(); }

  // Exact conversion; nullopt when the denominator does not divide out.
  std::optional<Polynomial> to_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction reciprocal() const;

  // Decided by cross-multiplication num_a*den_b == num_b*den_a.
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction substitute(const std::map<unsigned, Polynomial>& images) const;

private:
  void push_den_factor(Polynomial f, unsigned mult);
  void reduce();

  Polynomial num_;
  DenFactors den_;
};

} // namespace qfn

#endif

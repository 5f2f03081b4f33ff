#ifndef QFN_POLYNOMIAL_HPP
#define QFN_POLYNOMIAL_HPP

#include <map>
#include <optional>

#include "qfn/gaussian_rational.hpp"
#include "qfn/monomial.hpp"

namespace qfn {

// Sparse multivariate polynomial with Gaussian-rational coefficients.
// Terms are kept in ascending grevlex order; zero coefficients are never stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, GaussianRational, GrevlexLess>;

  Polynomial() = default; // zero
  explicit Polynomial(GaussianRational c);
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}

  static Polynomial variable(unsigned v, unsigned e = 1);
  static Polynomial term(Monomial m, GaussianRational c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  unsigned total_degree() const; // 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }

  const TermMap& terms() const { return terms_; }
  GaussianRational coefficient(const Monomial& m) const;
  GaussianRational constant_term() const { return coefficient(Monomial()); }

  // Leading term under grevlex; invalid on the zero polynomial.
  const Monomial& leading_monomial() const;
  const GaussianRational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;

  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator*(Polynomial p, const GaussianRational& c) { return p *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial p) { return p *= c; }
  Polynomial divided_by_scalar(const GaussianRational& c) const;

  Polynomial pow(unsigned e) const;

  // Exact polynomial division; nullopt when d does not divide exactly.
  std::optional<Polynomial> divided_by(const Polynomial& d) const;

  // Ring homomorphism sending listed variables to their images; unlisted
  // variables map to themselves.
  Polynomial substitute(const std::map<unsigned, Polynomial>& images) const;

  Polynomial truncate(unsigned degree_bound) const;

  // Terms whose exponent at v equals e, with v removed.
  Polynomial coefficient_of(unsigned v, unsigned e) const;
  unsigned degree_in(unsigned v) const;

  // gcd of all term monomials (the monomial content); one for the zero poly.
  Monomial monomial_content() const;

  std::optional<unsigned> max_variable() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Arbitrary total order for use as an ordered-container key.
  static int compare(const Polynomial& a, const Polynomial& b);

private:
  void add_term(const Monomial& m, const GaussianRational& c);
  TermMap terms_;
};

// Truncating product: drops result terms of total degree > bound.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned bound);

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return Polynomial::compare(a, b) < 0;
  }
};

} // namespace qfn

#endif

#include "qfn/polynomial.hpp"

#include "qfn/error.hpp"

namespace qfn {

Polynomial::Polynomial(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(unsigned v, unsigned e) {
  return term(Monomial::variable(v, e), GaussianRational(1));
}

Polynomial Polynomial::term(Monomial m, GaussianRational c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second.is_one();
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

const Monomial& Polynomial::leading_monomial() const { return terms_.rbegin()->first; }

const GaussianRational& Polynomial::leading_coefficient() const {
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::divided_by_scalar(const GaussianRational& c) const {
  Polynomial out = *this;
  out *= c.inverse();
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out(GaussianRational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) out *= base;
    if (e >>= 1u) base *= base;
  }
  return out;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Polynomial q;
  Polynomial r = *this;
  const Monomial& dm = d.leading_monomial();
  const GaussianRational& dc = d.leading_coefficient();
  while (!r.is_zero()) {
    auto m = r.leading_monomial().divided_by(dm);
    if (!m) return std::nullopt;
    Polynomial t = term(*m, r.leading_coefficient() / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial Polynomial::substitute(const std::map<unsigned, Polynomial>& images) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial prod(c);
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end())
        untouched = untouched * Monomial::variable(v, e);
      else
        prod *= it->second.pow(e);
    }
    out += prod * term(untouched, GaussianRational(1));
  }
  return out;
}

Polynomial Polynomial::truncate(unsigned degree_bound) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= degree_bound) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::coefficient_of(unsigned v, unsigned e) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != e) continue;
    auto stripped = m.divided_by(Monomial::variable(v, e));
    out.add_term(*stripped, c);
  }
  return out;
}

unsigned Polynomial::degree_in(unsigned v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  auto it = terms_.begin();
  Monomial g = it->first;
  for (++it; it != terms_.end() && !g.is_one(); ++it) g = g.gcd(it->first);
  return g;
}

std::optional<unsigned> Polynomial::max_variable() const {
  std::optional<unsigned> out;
  for (const auto& [m, c] : terms_)
    if (!m.factors().empty()) {
      unsigned v = m.factors().back().first;
      if (!out || v > *out) out = v;
    }
  return out;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    int c = grevlex_compare(ia->first, ib->first);
    if (c != 0) return c;
    c = GaussianRational::compare(ia->second, ib->second);
    if (c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned bound) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() > bound) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > bound) continue;
      out += Polynomial::term(ma * mb, ca * cb);
    }
  }
  return out;
}

} // namespace qfn

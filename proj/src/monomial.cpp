#include "qfn/monomial.hpp"

#include <algorithm>

namespace qfn {

Monomial Monomial::variable(unsigned v, unsigned e) {
  Monomial m;
  if (e > 0) {
    m.factors_.emplace_back(v, e);
    m.degree_ = e;
  }
  return m;
}

Monomial Monomial::from_factors(Factors f) {
  std::sort(f.begin(), f.end());
  Monomial m;
  for (const auto& [v, e] : f) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(unsigned v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + o.degree_;
  return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : o.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.degree_ = degree_ - o.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      unsigned e = std::min(a->second, b->second);
      out.factors_.emplace_back(a->first, e);
      out.degree_ += e;
      ++a;
      ++b;
    }
  }
  return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() || ib != fb.rend()) {
    unsigned va = (ia != fa.rend()) ? ia->first : 0;
    unsigned vb = (ib != fb.rend()) ? ib->first : 0;
    if (ia != fa.rend() && (ib == fb.rend() || va > vb)) {
      // a has a positive exponent at the largest unmatched variable
      return -1;
    }
    if (ib != fb.rend() && (ia == fa.rend() || vb > va)) {
      return 1;
    }
    // same variable index
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

} // namespace qfn

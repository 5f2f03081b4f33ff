#include "qfn/rational_function.hpp"

#include "qfn/error.hpp"

namespace qfn {

RationalFunction::RationalFunction(Polynomial num, const Polynomial& den)
    : num_(std::move(num)) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  push_den_factor(den, 1);
  reduce();
}

void RationalFunction::push_den_factor(Polynomial f, unsigned mult) {
  if (mult == 0) return;
  if (f.is_constant()) {
    num_ *= f.constant_term().inverse().pow(mult);
    return;
  }
  Monomial content = f.monomial_content();
  if (!content.is_one()) {
    f = *f.divided_by(Polynomial::term(content, GaussianRational(1)));
    for (const auto& [v, e] : content.factors())
      den_[Polynomial::variable(v)] += e * mult;
    if (f.is_constant()) {
      num_ *= f.constant_term().inverse().pow(mult);
      return;
    }
  }
  const GaussianRational lc = f.leading_coefficient();
  if (!lc.is_one()) {
    f = f.divided_by_scalar(lc);
    num_ *= lc.inverse().pow(mult);
  }
  den_[std::move(f)] += mult;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divided_by(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
      if (num_.is_zero()) {
        den_.clear();
        return;
      }
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

Polynomial RationalFunction::den() const {
  Polynomial out(GaussianRational(1));
  for (const auto& [f, mult] : den_) out *= f.pow(mult);
  return out;
}

std::optional<Polynomial> RationalFunction::to_polynomial() const {
  if (den_.empty()) return num_;
  return num_.divided_by(den());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  DenFactors common = den_;
  for (const auto& [f, mult] : o.den_) {
    auto& slot = common[f];
    slot = std::max(slot, mult);
  }
  Polynomial a = num_;
  Polynomial b = o.num_;
  for (const auto& [f, mult] : common) {
    auto ita = den_.find(f);
    unsigned ma = ita == den_.end() ? 0 : ita->second;
    auto itb = o.den_.find(f);
    unsigned mb = itb == o.den_.end() ? 0 : itb->second;
    if (mult > ma) a *= f.pow(mult - ma);
    if (mult > mb) b *= f.pow(mult - mb);
  }
  num_ = a + b;
  den_ = std::move(common);
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  Polynomial nb = o.num_;
  DenFactors db = o.den_;
  // cross-cancel before multiplying out
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0 && !nb.is_zero()) {
      auto q = nb.divided_by(it->first);
      if (!q) break;
      nb = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  for (auto it = db.begin(); it != db.end();) {
    while (it->second > 0 && !num_.is_zero()) {
      auto q = num_.divided_by(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? db.erase(it) : std::next(it);
  }
  num_ *= nb;
  for (const auto& [f, mult] : db) den_[f] += mult;
  reduce();
  return *this;
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  RationalFunction out(den());
  out.push_den_factor(num_, 1);
  out.reduce();
  return out;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.reciprocal();
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den() == o.num_ * den();
}

RationalFunction RationalFunction::substitute(const std::map<unsigned, Polynomial>& images) const {
  RationalFunction out(num_.substitute(images));
  for (const auto& [f, mult] : den_) {
    Polynomial g = f.substitute(images);
    if (g.is_zero())
      throw Error(ErrorKind::DenominatorVanishes, "substitution sends a denominator to zero");
    out.push_den_factor(std::move(g), mult);
  }
  out.reduce();
  return out;
}

} // namespace qfn

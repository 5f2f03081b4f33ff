#include "qfn/gaussian_rational.hpp"

#include "qfn/error.hpp"

namespace qfn {

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  mpq_class r(re.empty() ? "0" : re), i(im.empty() ? "0" : im);
  if (r.get_den() == 0 || i.get_den() == 0)
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  r.canonicalize();
  i.canonicalize();
  return GaussianRational(std::move(r), std::move(i));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return GaussianRational(mpq_class(re_ / n), mpq_class(-im_ / n));
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational out(1);
  GaussianRational base = *this;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

int GaussianRational::compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im_, b.im_);
  if (c != 0) return c < 0 ? -1 : 1;
  return 0;
}

} // namespace qfn

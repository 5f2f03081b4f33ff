#ifndef QFN_GAUSSIAN_RATIONAL_HPP
#define QFN_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qfn {

// Exact complex number a + b*i with arbitrary-precision rational parts.
// Both parts are kept canonical by GMP (reduced, positive denominator).
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  // re = num/den (canonicalized); throws on den == 0.
  static GaussianRational ratio(long num, long den);

  // Parses "p", "-p/q" style rational strings for both parts.
  static GaussianRational parse(const std::string& re, const std::string& im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return im_ == 0 && re_ == 1; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  GaussianRational inverse() const;
  GaussianRational pow(unsigned e) const;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Total order (re first, then im); used for canonical forms only.
  static int compare(const GaussianRational& a, const GaussianRational& b);

private:
  mpq_class re_;
  mpq_class im_;
};

} // namespace qfn

#endif

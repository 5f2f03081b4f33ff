#ifndef QFN_MONOMIAL_HPP
#define QFN_MONOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

namespace qfn {

// Sparse power product over a single indexed variable alphabet.
// Stored factors are sorted by variable index; zero exponents are never kept.
class Monomial {
public:
  using Factors = std::vector<std::pair<unsigned, unsigned>>; // (variable, exponent > 0)

  Monomial() = default;
  static Monomial variable(unsigned v, unsigned e = 1);
  static Monomial from_factors(Factors f); // sorts, merges, drops zeros

  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(unsigned v) const;
  const Factors& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  std::optional<Monomial> divided_by(const Monomial& o) const;

  // Componentwise gcd / min of exponents.
  Monomial gcd(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
  Factors factors_;
  unsigned degree_ = 0;
};

// Graded reverse-lexicographic comparison with variable-index tiebreak:
// higher total degree wins; on ties the monomial with the smaller exponent
// at the largest differing variable index is the larger one.
int grevlex_compare(const Monomial& a, const Monomial& b); // -1, 0, 1

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) < 0;
  }
};

} // namespace qfn

#endif

#ifndef QFN_IDENTITIES_HPP
#define QFN_IDENTITIES_HPP

#include <string>

#include "qfn/pfaffian.hpp"

namespace qfn {

// One verified instance of an identity: both sides computed independently,
// equal holds exactly iff lhs - rhs = 0.
struct IdentityReport {
  std::string name;
  std::string params;
  RationalFunction lhs;
  RationalFunction rhs;
  bool equal = false;
};

IdentityReport make_report(std::string name, std::string params, RationalFunction lhs,
                           RationalFunction rhs);

// (-1)^{Sigma(I)+Sigma(J)+C(m,2)+C(n,2)+C(k,2)} with k = m-|I| = n-|J|.
// Throws ParityViolation when |I| or |J| is odd or the deficits differ.
int epsilon_sign(const IndexSet& i, const IndexSet& j, unsigned m, unsigned n);

// Pf of [[Z, W], [-tW, Z']] against the signed sum of paired subpfaffians
// times complementary minors of W.
IdentityReport laplace_expand(const SkewMatrix& z, const SkewMatrix& zp, const RectMatrix& w);

// Block Pfaffian with the corner identity coupling against the K-subset sum.
IdentityReport cbiw_sum(const SkewMatrix& z, const SkewMatrix& zp, unsigned m, unsigned n,
                        unsigned l);

enum class CauchyBinetVariant { CB1, CB2 };

// Pfaffian analogue of the Cauchy-Binet formula, both variants.
IdentityReport cauchy_binet_pf(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& s,
                               const RectMatrix& t, CauchyBinetVariant variant);

// Pfaffian analogue of the minor-summation formula.
IdentityReport minor_summation_pf(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& s);

// Double-subset summation formula with an l x l transfer matrix.
IdentityReport iw2_sum(const SkewMatrix& a, const SkewMatrix& b, const RectMatrix& t);

enum class SylvesterVariant { PivotFirst, PivotLast };

// Sylvester-type quotient identity over the rational-function field;
// n is the pivot-block order. Throws ZeroPivot when the pivot vanishes.
IdentityReport sylvester_check(const SkewMatrix& x, unsigned n, SylvesterVariant variant);

// (b - a)/(b + a): the matrix entry of the alternating-ratio kernel.
RationalFunction schur_entry(const RationalFunction& a, const RationalFunction& b);

// Pf((a_j - a_i)/(a_j + a_i)) against the product over pairs.
IdentityReport schur_pfaffian_check(const std::vector<RationalFunction>& alphabet);

// Pieces reused by suites and tests.
RectMatrix corner_identity_block(unsigned m, unsigned n, unsigned l);
SkewMatrix bordered_skew(const SkewMatrix& a, const RectMatrix& s_cols);

} // namespace qfn

#endif

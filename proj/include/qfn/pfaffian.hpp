#ifndef QFN_PFAFFIAN_HPP
#define QFN_PFAFFIAN_HPP

#include "qfn/matrix.hpp"

namespace qfn {

enum class PfaffianMethod {
  Definition,  // signed sum over perfect matchings
  Expansion,   // row/column expansion, memoized over index subsets
  Elimination, // skew Gaussian elimination over the fraction field
};

// Pf X. Odd order gives 0, order 0 gives 1. All methods agree.
RationalFunction pfaffian(const SkewMatrix& x,
                          PfaffianMethod method = PfaffianMethod::Elimination);

// Pf of the principal submatrix X(I); Pf X(empty) = 1.
RationalFunction sub_pfaffian(const SkewMatrix& x, const IndexSet& idx,
                              PfaffianMethod method = PfaffianMethod::Elimination);

// One expansion step along row/column k (1-based), lower orders by the
// default method. Equal to Pf X for every k.
RationalFunction pfaffian_expand_along(const SkewMatrix& x, unsigned k);

} // namespace qfn

#endif

#ifndef QFN_MATRIX_HPP
#define QFN_MATRIX_HPP

#include <vector>

#include "qfn/index_set.hpp"
#include "qfn/rational_function.hpp"

namespace qfn {

class SkewMatrix;

// Dense rectangular matrix over the rational-function field.
class RectMatrix {
public:
  RectMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RectMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RationalFunction& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RationalFunction& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RectMatrix transpose() const;
  RectMatrix operator-() const;
  RectMatrix operator*(const RectMatrix& o) const;
  RectMatrix operator+(const RectMatrix& o) const;
  RectMatrix operator-(const RectMatrix& o) const;

  // Rows I, columns J (1-based index sets over the respective dimensions).
  RectMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  RectMatrix select_columns(const IndexSet& cols) const;

private:
  std::size_t rows_, cols_;
  std::vector<RationalFunction> entries_;
};

// det of the square submatrix on rows I, columns J; det of the empty
// minor is 1. Throws ShapeMismatch when |I| != |J|.
RationalFunction minor_det(const RectMatrix& m, const IndexSet& rows, const IndexSet& cols);
RationalFunction determinant(const RectMatrix& m);

// Skew-symmetric square matrix; only the strict upper triangle is stored,
// so the zero diagonal and the sign convention cannot be violated.
class SkewMatrix {
public:
  explicit SkewMatrix(std::size_t n) : n_(n), upper_(n * (n ? n - 1 : 0) / 2) {}

  // Validates skew-symmetry of a full square array exactly.
  static SkewMatrix from_full(const RectMatrix& m);

  std::size_t size() const { return n_; }

  RationalFunction at(std::size_t i, std::size_t j) const;
  void set_upper(std::size_t i, std::size_t j, RationalFunction v); // requires i < j
  const RationalFunction& upper(std::size_t i, std::size_t j) const;

  RectMatrix to_rect() const;
  SkewMatrix principal(const IndexSet& idx) const;
  SkewMatrix negated() const;

private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }
  std::size_t n_;
  std::vector<RationalFunction> upper_;
};

// [[Z, W], [-tW, Zp]] as one skew-symmetric matrix.
SkewMatrix block_skew(const SkewMatrix& z, const RectMatrix& w, const SkewMatrix& zp);

// tU X U; the result is skew-symmetric and Pf(tU X U) = det(U) Pf(X).
SkewMatrix congruence(const SkewMatrix& x, const RectMatrix& u);

} // namespace qfn

#endif

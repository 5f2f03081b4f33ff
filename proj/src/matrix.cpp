#include "qfn/matrix.hpp"

#include <map>

#include "qfn/error.hpp"

namespace qfn {

RectMatrix RectMatrix::identity(std::size_t n) {
  RectMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
  return m;
}

RectMatrix RectMatrix::transpose() const {
  RectMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RectMatrix RectMatrix::operator-() const {
  RectMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

RectMatrix RectMatrix::operator*(const RectMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  RectMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const RationalFunction& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += a * o.at(k, j);
      }
    }
  return out;
}

RectMatrix RectMatrix::operator+(const RectMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  RectMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + o.entries_[k];
  return out;
}

RectMatrix RectMatrix::operator-(const RectMatrix& o) const { return *this + (-o); }

RectMatrix RectMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.ground() != rows_ || cols.ground() != cols_)
    throw Error(ErrorKind::ShapeMismatch, "submatrix index set ground mismatch");
  RectMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(i, j) = at(rows.elements()[i] - 1, cols.elements()[j] - 1);
  return out;
}

RectMatrix RectMatrix::select_columns(const IndexSet& cols) const {
  return submatrix(IndexSet::full(rows_), cols);
}

RationalFunction determinant(const RectMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square");
  std::size_t n = m.rows();
  if (n == 0) return RationalFunction(1);
  // Laplace expansion along the first remaining row, memoized on the
  // surviving column mask.
  std::map<unsigned long, RationalFunction> memo;
  unsigned long full = (n >= 64) ? 0 : ((1ul << n) - 1);
  if (n >= 64) throw Error(ErrorKind::ShapeMismatch, "determinant size too large");

  auto rec = [&](auto&& self, unsigned long mask) -> RationalFunction {
    if (mask == 0) return RationalFunction(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcountl(mask));
    RationalFunction acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1ul << j))) continue;
      if (!m.at(row, j).is_zero()) {
        RationalFunction term = m.at(row, j) * self(self, mask & ~(1ul << j));
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, full);
}

RationalFunction minor_det(const RectMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorKind::ShapeMismatch, "minor needs equally many rows and columns");
  if (rows.size() == 0) return RationalFunction(1);
  return determinant(m.submatrix(rows, cols));
}

SkewMatrix SkewMatrix::from_full(const RectMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotSkewSymmetric, "skew matrix must be square");
  SkewMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero())
      throw Error(ErrorKind::NotSkewSymmetric, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m.at(j, i) == -m.at(i, j)))
        throw Error(ErrorKind::NotSkewSymmetric, "entry (j,i) is not -(i,j)");
      out.set_upper(i, j, m.at(i, j));
    }
  }
  return out;
}

RationalFunction SkewMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return RationalFunction();
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

void SkewMatrix::set_upper(std::size_t i, std::size_t j, RationalFunction v) {
  upper_[slot(i, j)] = std::move(v);
}

const RationalFunction& SkewMatrix::upper(std::size_t i, std::size_t j) const {
  return upper_[slot(i, j)];
}

RectMatrix SkewMatrix::to_rect() const {
  RectMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      out.at(i, j) = upper_[slot(i, j)];
      out.at(j, i) = -upper_[slot(i, j)];
    }
  return out;
}

SkewMatrix SkewMatrix::principal(const IndexSet& idx) const {
  if (idx.ground() != n_)
    throw Error(ErrorKind::ShapeMismatch, "principal submatrix ground mismatch");
  SkewMatrix out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      out.set_upper(i, j, upper_[slot(idx.elements()[i] - 1, idx.elements()[j] - 1)]);
  return out;
}

SkewMatrix SkewMatrix::negated() const {
  SkewMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out.set_upper(i, j, -upper_[slot(i, j)]);
  return out;
}

SkewMatrix block_skew(const SkewMatrix& z, const RectMatrix& w, const SkewMatrix& zp) {
  if (w.rows() != z.size() || w.cols() != zp.size())
    throw Error(ErrorKind::ShapeMismatch, "block sizes do not match");
  std::size_t m = z.size(), n = zp.size();
  SkewMatrix out(m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.set_upper(i, j, z.upper(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_upper(i, m + j, w.at(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set_upper(m + i, m + j, zp.upper(i, j));
  return out;
}

SkewMatrix congruence(const SkewMatrix& x, const RectMatrix& u) {
  if (u.rows() != x.size() || u.cols() != x.size())
    throw Error(ErrorKind::ShapeMismatch, "congruence transform needs a square factor");
  RectMatrix prod = u.transpose() * x.to_rect() * u;
  return SkewMatrix::from_full(prod);
}

} // namespace qfn

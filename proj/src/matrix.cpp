#include "tdeg/matrix.hpp"

#include "tdeg/error.hpp"

namespace tdeg {

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::InvalidParam, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& which) const {
  ExactMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  return out;
}

ExactVector ExactMatrix::operator*(const ExactVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidParam, "dimension mismatch in matrix-vector product");
  ExactVector out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Rat ExactMatrix::cofactor_determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidParam, "determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  if (rows_ == 1) return data_[0];
  Rat det = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(0, c) == 0) continue;
    ExactMatrix minor(rows_ - 1, cols_ - 1);
    for (std::size_t r = 1; r < rows_; ++r)
      for (std::size_t cc = 0, j = 0; cc < cols_; ++cc)
        if (cc != c) minor(r - 1, j++) = (*this)(r, cc);
    const Rat term = (*this)(0, c) * minor.cofactor_determinant();
    det += (c % 2 == 0) ? term : Rat(-term);
  }
  return det;
}

std::optional<ExactVector> ExactMatrix::solve(const ExactVector& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw Error(ErrorKind::InvalidParam, "solve needs a square system");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactVector x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(x[pivot], x[col]);
    }
    const Rat inv = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    x[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= factor * a(col, c);
      x[r] -= factor * x[col];
    }
  }
  return x;
}

}  // namespace tdeg

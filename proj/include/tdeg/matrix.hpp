#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdeg/rational.hpp"

namespace tdeg {

using ExactVector = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static ExactMatrix from_columns(const std::vector<ExactVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector column(std::size_t c) const;
  ExactMatrix select_columns(const std::vector<std::size_t>& which) const;

  ExactVector operator*(const ExactVector& v) const;

  /// Cofactor expansion along the first row; square matrices only.
  Rat cofactor_determinant() const;

  /// Solution x of (*this) x = b for a square nonsingular matrix, by exact
  /// Gauss-Jordan elimination; nullopt when singular.
  std::optional<ExactVector> solve(const ExactVector& b) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

}  // namespace tdeg

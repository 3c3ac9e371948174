#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/scalar.hpp"

namespace transportlab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Submatrix keeping the listed columns, in the given order.
  RationalMatrix select_columns(const std::vector<std::size_t>& columns) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each non-zero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination over the rationals. When `augmented` is true the
/// last column is treated as a right-hand side and is never chosen as pivot.
RowEchelon row_reduce(RationalMatrix m, bool augmented = false);

std::size_t rank(const RationalMatrix& m);

/// Determinant of a square matrix (exact).
Rational determinant(RationalMatrix m);

}  // namespace transportlab

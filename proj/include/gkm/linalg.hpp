#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  // The first row appended to an empty 0x0 matrix fixes the column count.
  void append_row(std::span<const Rational> values);

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

// Fraction-free (Bareiss) elimination over the integers after clearing
// denominators row by row. Pivot: first column with a nonzero entry among the
// remaining rows, taking the remaining row of least index.
Echelon reduced_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

// One basis vector per free column f of the reduced echelon form, with a 1 in
// position f and zeros in the other free positions.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gkm

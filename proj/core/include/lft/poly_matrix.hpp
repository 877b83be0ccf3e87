#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lft/bit_matrix.hpp"
#include "lft/poly2.hpp"

namespace lft {

/// Dense matrix over F2[z].
class PolyMatrix {
 public:
  /// Zero matrix; throws ShapeError on a zero dimension.
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);
  /// Constant polynomial matrix with the entries of `m`.
  static PolyMatrix from_bits(const BitMatrix& m);
  /// diag(entries) padded with zeros to rows x cols.
  static PolyMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Poly2>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Poly2& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly2& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  /// Largest entry degree, Poly2::kDegreeOfZero for the zero matrix.
  int max_degree() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row(dst) += factor * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, const Poly2& factor);
  /// col(dst) += factor * col(src)
  void add_col_multiple(std::size_t dst, std::size_t src, const Poly2& factor);

  /// Matrix with row `r` and column `c` removed. Requires at least 2 rows and 2 columns.
  PolyMatrix minor_matrix(std::size_t r, std::size_t c) const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly2& s, PolyMatrix m);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// One line per row, entries in lowest-degree-first bit form.
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly2> entries_;
};

/// Determinant; cofactor expansion up to 4x4, fraction-free elimination above.
/// Throws ShapeError for non-square input.
Poly2 det(const PolyMatrix& m);
Poly2 det_cofactor(const PolyMatrix& m);
Poly2 det_fraction_free(const PolyMatrix& m);

/// Classical adjoint: m * adjugate(m) == det(m) * I. A 1x1 matrix has
/// adjugate [[1]].
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace lft

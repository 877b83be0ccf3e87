#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lft {

/// Raised when operand shapes are incompatible or a dimension is zero.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The random stream used throughout the library.
using Rng = std::mt19937_64;

/// Dense matrix over F2 with bit-packed rows.
///
/// Each row occupies `words_per_row()` 64-bit words; bit `c % 64` of word
/// `c / 64` holds column `c`. Padding bits past `cols()` are always zero, so
/// rows can be compared and xor-ed word by word.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// Zero matrix. Throws ShapeError if either dimension is zero.
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  /// Parses one 0/1 string per row, e.g. {"0110", "1001"}.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    Word& w = row(r)[c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }

  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;
  void swap_rows(std::size_t i, std::size_t j);
  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);

  /// Entrywise sum (xor). Shapes must agree.
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::vector<std::string> to_rows() const;

  /// Mask of the valid bits in the last word of a row.
  Word tail_mask() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<Word> bits_;
};

/// a * b over F2. Throws ShapeError unless a.cols() == b.rows().
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Vertical concatenation. Throws ShapeError on column mismatch.
BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);

BitMatrix transpose(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Reduced row echelon form: every pivot is the only 1 in its column, pivot
/// columns strictly increase and zero rows come last.
BitMatrix rref(const BitMatrix& m);

/// Each entry an independent fair bit drawn from `rng`.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace lft

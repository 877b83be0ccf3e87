#include "lft/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace lft {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("BitMatrix dimensions must be positive");
  }
  bits_.assign(rows_ * words_per_row_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ShapeError("matrix has no rows");
  const std::size_t cols = rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ShapeError("row " + std::to_string(r) + " has width " +
                       std::to_string(rows[r].size()) + ", expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("matrix rows must contain only '0' and '1'");
      }
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const auto words = row(r);
  return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

void BitMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(row(i).begin(), row(i).end(), row(j).begin());
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  auto d = row(dst);
  const auto s = row(src);
  for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("matrix sum of differently shaped operands");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out[r][c] = '1';
  return out;
}

BitMatrix::Word BitMatrix::tail_mask() const {
  const std::size_t used = cols_ % kWordBits;
  return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("multiply: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto arow = a.row(i);
    auto orow = out.row(i);
    for (std::size_t w = 0; w < arow.size(); ++w) {
      for (BitMatrix::Word bits = arow[w]; bits != 0; bits &= bits - 1) {
        const std::size_t k = w * BitMatrix::kWordBits + std::countr_zero(bits);
        const auto brow = b.row(k);
        for (std::size_t v = 0; v < orow.size(); ++v) orow[v] ^= brow[v];
      }
    }
  }
  return out;
}

BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw ShapeError("stack: column counts differ");
  }
  BitMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out.set(c, r, true);
  return out;
}

namespace {

// Gauss-Jordan elimination in place; returns the rank.
std::size_t reduce(BitMatrix& m, bool full) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(pivot_row, r);
    for (std::size_t i = full ? 0 : pivot_row + 1; i < m.rows(); ++i) {
      if (i != pivot_row && m.get(i, c)) m.add_row(i, pivot_row);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return reduce(work, false);
}

BitMatrix rref(const BitMatrix& m) {
  BitMatrix work = m;
  reduce(work, true);
  return work;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  const BitMatrix::Word mask = m.tail_mask();
  for (std::size_t r = 0; r < rows; ++r) {
    auto words = m.row(r);
    for (auto& w : words) w = rng();
    words.back() &= mask;
  }
  return m;
}

}  // namespace lft

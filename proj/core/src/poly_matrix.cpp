#include "lft/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lft {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("PolyMatrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly2::one();
  return m;
}

PolyMatrix PolyMatrix::from_bits(const BitMatrix& b) {
  PolyMatrix m(b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) m.at(r, c) = Poly2::one();
  return m;
}

PolyMatrix PolyMatrix::diagonal(std::size_t rows, std::size_t cols,
                                const std::vector<Poly2>& entries) {
  if (entries.size() > std::min(rows, cols)) throw ShapeError("too many diagonal entries");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly2& p) { return p.is_zero(); });
}

int PolyMatrix::max_degree() const {
  int d = Poly2::kDegreeOfZero;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

void PolyMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void PolyMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void PolyMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Poly2& factor) {
  if (factor.is_zero()) return;
  const bool unit = factor.is_one();
  for (std::size_t c = 0; c < cols_; ++c) {
    const Poly2& s = at(src, c);
    if (s.is_zero()) continue;
    at(dst, c) += unit ? s : factor * s;
  }
}

void PolyMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Poly2& factor) {
  if (factor.is_zero()) return;
  const bool unit = factor.is_one();
  for (std::size_t r = 0; r < rows_; ++r) {
    const Poly2& s = at(r, src);
    if (s.is_zero()) continue;
    at(r, dst) += unit ? s : factor * s;
  }
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  if (rows_ < 2 || cols_ < 2) throw ShapeError("minor of a matrix with a single row or column");
  PolyMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out.at(oi, oj++) = at(i, j);
    }
    ++oi;
  }
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("PolyMatrix sum: shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("PolyMatrix product: inner dimensions differ");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly2& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly2& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

PolyMatrix operator*(const Poly2& s, PolyMatrix m) {
  for (auto& e : m.entries_) e = s * e;
  return m;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
    os << '\n';
  }
  return os.str();
}

namespace {

void require_square(const PolyMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + " of a non-square matrix");
}

}  // namespace

Poly2 det_cofactor(const PolyMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) + m.at(0, 1) * m.at(1, 0);
  // Signs vanish in characteristic 2.
  Poly2 acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    acc += m.at(0, c) * det_cofactor(m.minor_matrix(0, c));
  }
  return acc;
}

Poly2 det_fraction_free(const PolyMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  PolyMatrix w = m;
  Poly2 prev = Poly2::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k).is_zero()) ++r;
      if (r == n) return Poly2::zero();
      w.swap_rows(k, r);  // sign change is invisible over F2
    }
    const Poly2 pivot = w.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly2 v = pivot * w.at(i, j) + w.at(i, k) * w.at(k, j);
        w.at(i, j) = prev.is_one() ? std::move(v) : exact_div(v, prev);
      }
      w.at(i, k) = Poly2::zero();
    }
    prev = pivot;
  }
  return w.at(n - 1, n - 1);
}

Poly2 det(const PolyMatrix& m) {
  require_square(m, "determinant");
  return m.rows() <= 4 ? det_cofactor(m) : det_fraction_free(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  require_square(m, "adjugate");
  const std::size_t n = m.rows();
  PolyMatrix out(n, n);
  if (n == 1) {
    out.at(0, 0) = Poly2::one();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(j, i) = det(m.minor_matrix(i, j));
  return out;
}

}  // namespace lft

#include "lft/local_frac.hpp"

#include "lft/bit_matrix.hpp"
#include "lft/poly_matrix.hpp"

namespace lft {

LocalFrac::LocalFrac(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void LocalFrac::normalize() {
  if (num_.is_zero()) {
    den_ = Poly2::one();
    return;
  }
  if (!den_.is_one()) {
    const Poly2 g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.constant_term()) {
    throw NotInvertibleError("denominator " + den_.to_pretty() +
                             " is divisible by z: not an element of the localization");
  }
}

LocalFrac& LocalFrac::operator+=(const LocalFrac& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

LocalFrac& LocalFrac::operator*=(const LocalFrac& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

LocalFrac& LocalFrac::operator/=(const LocalFrac& other) {
  if (other.is_zero()) throw NotInvertibleError("division by zero in the localization");
  if (!other.num_.constant_term()) {
    throw NotInvertibleError(other.num_.to_pretty() +
                             " is divisible by z and is not a unit of the localization");
  }
  num_ = num_ * other.den_;
  den_ = den_ * other.num_;
  normalize();
  return *this;
}

std::string LocalFrac::to_string() const {
  if (den_.is_one()) return num_.to_pretty();
  return "(" + num_.to_pretty() + ")/(" + den_.to_pretty() + ")";
}

FracMatrix::FracMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("FracMatrix dimensions must be positive");
}

FracMatrix FracMatrix::identity(std::size_t n) {
  FracMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LocalFrac(Poly2::one());
  return m;
}

FracMatrix FracMatrix::from_poly(const PolyMatrix& m, const Poly2& den) {
  FracMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = LocalFrac(m.at(r, c), den);
  return out;
}

FracMatrix operator*(const FracMatrix& a, const FracMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("FracMatrix product: inner dimensions differ");
  FracMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      LocalFrac acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

}  // namespace lft

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lft/poly2.hpp"

namespace lft {

class PolyMatrix;

/// Raised when an element of F2[z]_S has no inverse there, i.e. it is
/// divisible by z.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element num/den of the localization of F2[z] at S = {1 + z*b(z)}.
///
/// Always stored reduced with a denominator whose constant term is 1; zero is
/// stored as 0/1. Equality is therefore structural.
class LocalFrac {
 public:
  LocalFrac() : num_(), den_(Poly2::one()) {}
  /// Implicit embedding of F2[z].
  LocalFrac(Poly2 p) : num_(std::move(p)), den_(Poly2::one()) {}  // NOLINT
  /// Throws NotInvertibleError if den, once reduced, lies outside S, and
  /// std::domain_error if den is zero.
  LocalFrac(Poly2 num, Poly2 den);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// z-adic valuation of the element (valuation of the numerator).
  int z_valuation() const { return num_.z_valuation(); }

  LocalFrac& operator+=(const LocalFrac& other);
  LocalFrac& operator*=(const LocalFrac& other);
  /// Throws NotInvertibleError when `other` is divisible by z (or zero).
  LocalFrac& operator/=(const LocalFrac& other);

  friend LocalFrac operator+(LocalFrac a, const LocalFrac& b) { return a += b; }
  friend LocalFrac operator-(LocalFrac a, const LocalFrac& b) { return a += b; }
  friend LocalFrac operator*(LocalFrac a, const LocalFrac& b) { return a *= b; }
  friend LocalFrac operator/(LocalFrac a, const LocalFrac& b) { return a /= b; }

  friend bool operator==(const LocalFrac&, const LocalFrac&) = default;

  std::string to_string() const;

 private:
  void normalize();

  Poly2 num_;
  Poly2 den_;
};

/// Dense matrix over F2[z]_S.
class FracMatrix {
 public:
  FracMatrix(std::size_t rows, std::size_t cols);
  static FracMatrix identity(std::size_t n);
  /// Entrywise embedding of a polynomial matrix, optionally divided by `den`.
  static FracMatrix from_poly(const PolyMatrix& m, const Poly2& den = Poly2::one());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const LocalFrac& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  LocalFrac& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  friend bool operator==(const FracMatrix&, const FracMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LocalFrac> entries_;
};

FracMatrix operator*(const FracMatrix& a, const FracMatrix& b);

}  // namespace lft

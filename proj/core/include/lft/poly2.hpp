#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/container/small_vector.hpp>

namespace lft {

/// Polynomial over F2 in the indeterminate z.
///
/// Bit i of the packed coefficient words is the coefficient of z^i. The
/// representation is canonical: the last stored word is nonzero, and the zero
/// polynomial stores no words at all, so structural equality is polynomial
/// equality.
class Poly2 {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr int kDegreeOfZero = INT_MIN;

  Poly2() = default;

  static Poly2 zero() { return {}; }
  static Poly2 one() { return monomial(0); }
  static Poly2 monomial(int k);
  /// Polynomial whose low word is `bits` (bit i -> z^i).
  static Poly2 from_bits(Word bits);
  /// Lowest degree first: "011" is z + z^2.
  static Poly2 parse(std::string_view coefficients);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  int degree() const;
  bool coeff(int i) const;
  void set_coeff(int i, bool value);
  bool constant_term() const { return !words_.empty() && (words_[0] & 1U); }

  /// Largest k with z^k dividing this. Throws std::domain_error on zero.
  int z_valuation() const;

  /// Multiplication by z^k (k >= 0).
  Poly2 shifted_up(int k) const;
  /// Exact division by z^k; the low k coefficients must be zero.
  Poly2 shifted_down(int k) const;

  Poly2& operator+=(const Poly2& other);
  Poly2& operator-=(const Poly2& other) { return *this += other; }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2& operator*=(const Poly2& other) { return *this = *this * other; }

  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Lowest degree first, "0" for the zero polynomial.
  std::string to_string() const;
  /// Human-readable form such as "1 + z + z^3".
  std::string to_pretty() const;

  std::size_t word_count() const { return words_.size(); }
  Word word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

 private:
  void trim();

  boost::container::small_vector<Word, 2> words_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
/// Throws std::domain_error when dividing by zero.
std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b);

/// Quotient of an exact division; throws std::domain_error if b does not divide a.
Poly2 exact_div(const Poly2& a, const Poly2& b);

bool divides(const Poly2& d, const Poly2& a);

/// Greatest common divisor (monic, automatic over F2). Throws std::domain_error
/// when both arguments are zero.
Poly2 gcd(Poly2 a, Poly2 b);

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace lft

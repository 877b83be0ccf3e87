#include "lft/poly2.hpp"

#include <bit>
#include <ostream>

namespace lft {

Poly2 Poly2::monomial(int k) {
  if (k < 0) throw std::domain_error("negative exponent");
  Poly2 p;
  p.words_.assign(static_cast<std::size_t>(k / kWordBits) + 1, 0);
  p.words_.back() = Word{1} << (k % kWordBits);
  return p;
}

Poly2 Poly2::from_bits(Word bits) {
  Poly2 p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

Poly2 Poly2::parse(std::string_view coefficients) {
  Poly2 p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const char ch = coefficients[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("polynomial text must contain only '0' and '1'");
    }
    if (ch == '1') p.set_coeff(static_cast<int>(i), true);
  }
  return p;
}

int Poly2::degree() const {
  if (words_.empty()) return kDegreeOfZero;
  const auto top = static_cast<int>(words_.size()) - 1;
  return top * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool Poly2::coeff(int i) const {
  const auto w = static_cast<std::size_t>(i / kWordBits);
  return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
}

void Poly2::set_coeff(int i, bool value) {
  const auto w = static_cast<std::size_t>(i / kWordBits);
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const Word mask = Word{1} << (i % kWordBits);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

int Poly2::z_valuation() const {
  if (words_.empty()) throw std::domain_error("z-valuation of the zero polynomial");
  int v = 0;
  for (Word w : words_) {
    if (w != 0) return v + std::countr_zero(w);
    v += kWordBits;
  }
  return v;  // unreachable for canonical values
}

Poly2 Poly2::shifted_up(int k) const {
  if (words_.empty() || k == 0) return *this;
  const auto whole = static_cast<std::size_t>(k / kWordBits);
  const int part = k % kWordBits;
  Poly2 out;
  out.words_.assign(words_.size() + whole + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + whole] ^= words_[i] << part;
    if (part != 0) out.words_[i + whole + 1] ^= words_[i] >> (kWordBits - part);
  }
  out.trim();
  return out;
}

Poly2 Poly2::shifted_down(int k) const {
  if (words_.empty() || k == 0) return *this;
  const auto whole = static_cast<std::size_t>(k / kWordBits);
  const int part = k % kWordBits;
  Poly2 out;
  if (whole >= words_.size()) return out;
  out.words_.assign(words_.size() - whole, 0);
  for (std::size_t i = whole; i < words_.size(); ++i) {
    out.words_[i - whole] = words_[i] >> part;
    if (part != 0 && i + 1 < words_.size()) {
      out.words_[i - whole] |= words_[i + 1] << (kWordBits - part);
    }
  }
  out.trim();
  return out;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

namespace {

// Carry-less 64x64 -> 128 product.
inline void clmul(Poly2::Word a, Poly2::Word b, Poly2::Word& lo, Poly2::Word& hi) {
  lo = 0;
  hi = 0;
  for (; b != 0; b &= b - 1) {
    const int s = std::countr_zero(b);
    lo ^= a << s;
    if (s != 0) hi ^= a >> (64 - s);
  }
}

}  // namespace

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly2 out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == 0) continue;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      Poly2::Word lo = 0;
      Poly2::Word hi = 0;
      clmul(a.words_[i], b.words_[j], lo, hi);
      out.words_[i + j] ^= lo;
      out.words_[i + j + 1] ^= hi;
    }
  }
  out.trim();
  return out;
}

void Poly2::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string s(static_cast<std::size_t>(degree()) + 1, '0');
  for (int i = 0; i <= degree(); ++i)
    if (coeff(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string Poly2::to_pretty() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (!coeff(i)) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) s += "1";
    else if (i == 1) s += "z";
    else s += "z^" + std::to_string(i);
  }
  return s;
}

std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  Poly2 quotient;
  Poly2 rem = a;
  // Single-word fast path: both fit in one machine word.
  if (rem.word_count() <= 1 && b.word_count() == 1) {
    Poly2::Word r = rem.word(0);
    Poly2::Word q = 0;
    const Poly2::Word bw = b.word(0);
    while (r != 0) {
      const int dr = 63 - std::countl_zero(r);
      if (dr < db) break;
      q |= Poly2::Word{1} << (dr - db);
      r ^= bw << (dr - db);
    }
    return {Poly2::from_bits(q), Poly2::from_bits(r)};
  }
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    quotient.set_coeff(shift, true);
    rem += b.shifted_up(shift);
  }
  return {quotient, rem};
}

Poly2 exact_div(const Poly2& a, const Poly2& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Poly2& d, const Poly2& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly2 gcd(Poly2 a, Poly2 b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly2 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.to_pretty(); }

}  // namespace lft

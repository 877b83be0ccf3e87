#include "lft/decimal.hpp"

#include <cstdio>
#include <stdexcept>

#include "lft/census.hpp"

namespace lft {

namespace {

// round(num / den) for nonnegative num and positive den, halves rounded up.
mpz_class rounded_quotient(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_class twice_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

// value * 10^k as an exact rational, k may be negative.
mpq_class scale10(const mpq_class& value, long k) {
  if (k >= 0) return value * mpq_class(power(10, static_cast<std::size_t>(k)));
  return value / mpq_class(power(10, static_cast<std::size_t>(-k)));
}

}  // namespace

std::string to_scientific(const mpq_class& value, int significant) {
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const mpq_class mag = negative ? mpq_class(-value) : value;

  // Decimal exponent e with 10^e <= mag < 10^(e+1), seeded from a float guess.
  long e = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  while (scale10(mag, -e) >= 10) ++e;
  while (scale10(mag, -e) < 1) --e;

  const mpq_class scaled = scale10(mag, significant - 1 - e);
  mpz_class digits = rounded_quotient(scaled.get_num(), scaled.get_den());
  if (digits == power(10, static_cast<std::size_t>(significant))) {
    digits /= 10;
    ++e;
  }
  std::string s = digits.get_str();
  std::string mantissa = s.substr(0, 1);
  if (s.size() > 1) mantissa += "." + s.substr(1);
  char exp[32];
  std::snprintf(exp, sizeof exp, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return (negative ? "-" : "") + mantissa + exp;
}

std::string to_fixed(const mpq_class& value, int decimals) {
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  const bool negative = value < 0;
  const mpq_class mag = negative ? mpq_class(-value) : value;
  const mpq_class scaled = scale10(mag, decimals);
  std::string s = rounded_quotient(scaled.get_num(), scaled.get_den()).get_str();
  const auto d = static_cast<std::size_t>(decimals);
  if (s.size() <= d) s.insert(0, d + 1 - s.size(), '0');
  if (d > 0) s.insert(s.size() - d, ".");
  const bool all_zero = s.find_first_not_of("0.") == std::string::npos;
  return (negative && !all_zero ? "-" : "") + s;
}

std::string to_rational_string(const mpq_class& value) {
  mpq_class reduced = value;
  reduced.canonicalize();
  return reduced.get_str();
}

}  // namespace lft

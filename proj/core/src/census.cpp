#include "lft/census.hpp"

#include <stdexcept>

namespace lft {

void CountParams::validate() const {
  if (l == 0 || m == 0 || n == 0) throw std::invalid_argument("l, m and n must be positive");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}

mpz_class power(unsigned long q, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

namespace {

// prod_{j<k}(q^n - q^j)
mpz_class falling_product(unsigned long q, std::size_t n, std::size_t k) {
  const mpz_class qn = power(q, n);
  mpz_class acc = 1;
  for (std::size_t j = 0; j < k; ++j) acc *= qn - power(q, j);
  return acc;
}

}  // namespace

ClosedFormCounts closed_form_counts(const CountParams& p) {
  p.validate();
  const auto [l, m, n, q] = p;
  return {power(q, m * l + n * (l + m + n)), power(q, n * n + l * (m + n)),
          falling_product(q, n, n)};
}

mpz_class nm_count(std::size_t l, std::size_t n1, std::size_t n2, unsigned long q) {
  if (n1 == 0) throw std::invalid_argument("nm_count: n1 must be positive");
  if (n2 < n1) throw std::domain_error("nm_count: requires n2 >= n1");
  return falling_product(q, n2, n1) * power(q, (n2 + l) * (n2 - n1));
}

std::vector<mpz_class> ct_sequence(const CountParams& p) {
  p.validate();
  std::vector<mpz_class> ct;
  ct.reserve(p.n);
  // At n = 1 there are no smaller machines, so TNM vanishes and this is
  // (q^m - 1) q^(l(m+1)+1) / (q - 1); the division matters only for q > 2.
  for (std::size_t n = 1; n <= p.n; ++n) {
    const auto counts = closed_form_counts({p.l, p.m, n, p.q});
    mpz_class tnm = 0;
    for (std::size_t i = 1; i < n; ++i) tnm += ct[i - 1] * nm_count(p.l, i, n, p.q);
    const mpz_class numer = counts.lt - counts.tt - tnm;
    if (numer < 0 || !mpz_divisible_p(numer.get_mpz_t(), counts.ec.get_mpz_t())) {
      throw std::logic_error("canonical count recurrence produced an inexact division");
    }
    mpz_class value;
    mpz_divexact(value.get_mpz_t(), numer.get_mpz_t(), counts.ec.get_mpz_t());
    ct.push_back(std::move(value));
  }
  return ct;
}

mpz_class ct_canonical_count(const CountParams& p) { return ct_sequence(p).back(); }

mpz_class tnm_count(const CountParams& p) {
  p.validate();
  if (p.n == 1) return 0;
  const auto ct = ct_sequence({p.l, p.m, p.n - 1, p.q});
  mpz_class tnm = 0;
  for (std::size_t i = 1; i < p.n; ++i) tnm += ct[i - 1] * nm_count(p.l, i, p.n, p.q);
  return tnm;
}

mpz_class total_classes(const CountParams& p, std::size_t max_n, bool include_trivial) {
  if (max_n == 0) throw std::invalid_argument("total_classes: max_n must be positive");
  CountParams sized = p;
  sized.n = max_n;
  mpz_class total = 0;
  for (const auto& c : ct_sequence(sized)) total += c;
  if (include_trivial) total += power(p.q, p.l * p.m);
  return total;
}

}  // namespace lft

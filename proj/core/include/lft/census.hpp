#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace lft {

/// Structural parameters of a family of LFTs over F_q.
struct CountParams {
  std::size_t l = 1;
  std::size_t m = 1;
  std::size_t n = 1;
  unsigned long q = 2;

  /// Throws std::invalid_argument unless l, m, n >= 1 and q >= 2.
  void validate() const;
};

struct ClosedFormCounts {
  mpz_class lt;  ///< all LFTs: q^(ml + n(l+m+n))
  mpz_class tt;  ///< trivial LFTs (C = 0): q^(n^2 + l(m+n))
  mpz_class ec;  ///< size of a canonical class: prod_{i<n}(q^n - q^i)
};

ClosedFormCounts closed_form_counts(const CountParams& p);

/// Number of size-n2 LFTs equivalent to a given minimal LFT of size n1:
/// prod_{j<n1}(q^n2 - q^j) * q^((n2+l)(n2-n1)). Throws std::domain_error if n2 < n1
/// and std::invalid_argument if n1 == 0.
mpz_class nm_count(std::size_t l, std::size_t n1, std::size_t n2, unsigned long q = 2);

/// Canonical LFT counts CT(l, m, i) for i = 1..p.n, evaluated bottom-up so every
/// term of the recurrence is computed once. Element i-1 holds CT(l, m, i).
std::vector<mpz_class> ct_sequence(const CountParams& p);

/// CT(l, m, n). Throws std::logic_error if a division by EC is ever inexact.
mpz_class ct_canonical_count(const CountParams& p);

/// Non-trivial non-minimal count: sum_{i<n} CT(l, m, i) * NM(l, i, n).
mpz_class tnm_count(const CountParams& p);

/// sum_{i<=max_n} CT(l, m, i), plus q^(lm) trivial classes (one per D) when
/// include_trivial is set. p.n is ignored.
mpz_class total_classes(const CountParams& p, std::size_t max_n, bool include_trivial = false);

/// q^e as a big integer.
mpz_class power(unsigned long q, std::size_t e);

}  // namespace lft

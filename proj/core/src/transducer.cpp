#include "lft/transducer.hpp"

#include <algorithm>
#include <string>

namespace lft {

namespace {

void require_shape(const BitMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(std::string(name) + " must be " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

void require_column(const BitMatrix& v, std::size_t dim, const char* name) {
  require_shape(v, dim, 1, name);
}

// I - Az, which over F2 is I + Az.
PolyMatrix resolvent_matrix(const BitMatrix& a) {
  PolyMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Poly2::Word bits = (i == j ? 1U : 0U) | (a.get(i, j) ? 2U : 0U);
      m.at(i, j) = Poly2::from_bits(bits);
    }
  return m;
}

}  // namespace

Lft::Lft(BitMatrix a, BitMatrix b, BitMatrix c, BitMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const std::size_t n = a_.rows();
  const std::size_t l = b_.cols();
  const std::size_t m = c_.rows();
  require_shape(a_, n, n, "A");
  require_shape(b_, n, l, "B");
  require_shape(c_, m, n, "C");
  require_shape(d_, m, l, "D");
}

StepResult step(const Lft& t, const BitMatrix& s, const BitMatrix& x) {
  require_column(s, t.n(), "state");
  require_column(x, t.l(), "input symbol");
  return {multiply(t.a(), s) + multiply(t.b(), x), multiply(t.c(), s) + multiply(t.d(), x)};
}

Word run(const Lft& t, const BitMatrix& s0, const Word& input) {
  require_column(s0, t.n(), "state");
  Word out;
  out.reserve(input.size());
  BitMatrix s = s0;
  for (const auto& x : input) {
    auto r = step(t, s, x);
    s = std::move(r.state);
    out.push_back(std::move(r.output));
  }
  return out;
}

BitMatrix advance(const Lft& t, const BitMatrix& s0, const Word& input) {
  require_column(s0, t.n(), "state");
  BitMatrix s = s0;
  for (const auto& x : input) s = step(t, s, x).state;
  return s;
}

BitMatrix diagnostic_matrix(const Lft& t) {
  BitMatrix delta = t.c();
  BitMatrix block = t.c();
  for (std::size_t k = 1; k < t.n(); ++k) {
    block = multiply(block, t.a());
    delta = stack(delta, block);
  }
  return delta;
}

bool is_canonical(const Lft& t) {
  const BitMatrix dt = transpose(diagnostic_matrix(t));
  if (rank(dt) != t.n()) return false;
  return rref(dt) == dt;
}

mpz_class class_size_for_rank(std::size_t l, std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("diagnostic rank exceeds the state dimension");
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  mpz_class size = 1;
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class two_i;
    mpz_ui_pow_ui(two_i.get_mpz_t(), 2, i);
    size *= two_n - two_i;
  }
  mpz_class tail;
  mpz_ui_pow_ui(tail.get_mpz_t(), 2, (n + l) * (n - r));
  return size * tail;
}

mpz_class class_size(const Lft& t) {
  return class_size_for_rank(t.l(), t.n(), rank(diagnostic_matrix(t)));
}

TransferNumerator transfer_numerator(const Lft& t) {
  const std::size_t n = t.n();
  const Poly2 f = det(resolvent_matrix(t.a()));

  // markov[0] = D, markov[k + 1] = C A^k B.
  std::vector<BitMatrix> markov;
  markov.reserve(n + 1);
  markov.push_back(t.d());
  BitMatrix ak_b = t.b();
  for (std::size_t k = 0; k < n; ++k) {
    markov.push_back(multiply(t.c(), ak_b));
    if (k + 1 < n) ak_b = multiply(t.a(), ak_b);
  }

  PolyMatrix fh(t.m(), t.l());
  for (std::size_t deg = 0; deg <= n; ++deg) {
    BitMatrix coeff(t.m(), t.l());
    bool any = false;
    for (std::size_t a = 0; a <= deg; ++a) {
      if (!f.coeff(static_cast<int>(a))) continue;
      coeff += markov[deg - a];
      any = true;
    }
    if (!any) continue;
    for (std::size_t i = 0; i < t.m(); ++i)
      for (std::size_t j = 0; j < t.l(); ++j)
        if (coeff.get(i, j)) fh.at(i, j).set_coeff(static_cast<int>(deg), true);
  }
  return {std::move(fh), f};
}

TransferNumerator transfer_numerator_adjugate(const Lft& t) {
  const PolyMatrix resolvent = resolvent_matrix(t.a());
  const Poly2 f = det(resolvent);
  PolyMatrix fh = PolyMatrix::from_bits(t.c()) * adjugate(resolvent) * PolyMatrix::from_bits(t.b());
  fh = Poly2::monomial(1) * std::move(fh);
  fh += f * PolyMatrix::from_bits(t.d());
  return {std::move(fh), f};
}

FracMatrix transfer_matrix(const Lft& t) {
  const auto tn = transfer_numerator(t);
  return FracMatrix::from_poly(tn.fh, tn.f);
}

std::vector<int> h_valuations(const Lft& t) {
  // f is a unit of the localization, so H and fH share invariant factors up
  // to units; only the z-part of each factor survives.
  const auto factors = invariant_factors(transfer_numerator(t).fh);
  std::vector<int> vals;
  vals.reserve(factors.size());
  for (const auto& d : factors) vals.push_back(d.z_valuation());
  return vals;
}

InvariantFactorProfile h_invariant_profile(const Lft& t, std::size_t cap) {
  return profile_from_valuations(h_valuations(t), cap);
}

bool is_injective_with_delay(const Lft& t, std::size_t tau) {
  const auto vals = h_valuations(t);
  const auto within = std::count_if(vals.begin(), vals.end(),
                                    [tau](int v) { return static_cast<std::size_t>(v) <= tau; });
  return static_cast<std::size_t>(within) == t.l();
}

std::optional<std::size_t> min_injectivity_delay(const Lft& t) {
  const auto vals = h_valuations(t);
  if (vals.size() < t.l()) return std::nullopt;
  return static_cast<std::size_t>(*std::max_element(vals.begin(), vals.end()));
}

FracMatrix left_inverse_transfer(const Lft& t, std::size_t tau) {
  const auto tn = transfer_numerator(t);
  const auto snf = smith_normal_form(tn.fh);
  if (snf.rank < t.l()) {
    throw NotInjectiveError("transducer is not injective with any delay");
  }
  FracMatrix pseudo(t.l(), t.m());
  const int target = static_cast<int>(tau);
  for (std::size_t i = 0; i < t.l(); ++i) {
    const Poly2& d = snf.factors[i];
    const int k = d.z_valuation();
    if (k > target) {
      throw NotInjectiveError("transducer is not injective with delay " + std::to_string(tau));
    }
    pseudo.at(i, i) = LocalFrac(Poly2::monomial(target - k), d.shifted_down(k));
  }
  FracMatrix out = FracMatrix::from_poly(snf.v) * pseudo * FracMatrix::from_poly(snf.u);
  const LocalFrac scale(tn.f);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (!out.at(i, j).is_zero()) out.at(i, j) *= scale;
  return out;
}

}  // namespace lft

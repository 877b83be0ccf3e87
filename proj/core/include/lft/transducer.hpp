#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lft/bit_matrix.hpp"
#include "lft/local_frac.hpp"
#include "lft/poly_matrix.hpp"
#include "lft/smith.hpp"

namespace lft {

/// Linear finite transducer over F2: next state A s + B x, output C s + D x,
/// with input dimension l, output dimension m and state dimension n.
class Lft {
 public:
  /// Throws ShapeError unless A is n x n, B is n x l, C is m x n and D is m x l.
  Lft(BitMatrix a, BitMatrix b, BitMatrix c, BitMatrix d);

  std::size_t l() const { return b_.cols(); }
  std::size_t m() const { return c_.rows(); }
  std::size_t n() const { return a_.rows(); }

  const BitMatrix& a() const { return a_; }
  const BitMatrix& b() const { return b_; }
  const BitMatrix& c() const { return c_; }
  const BitMatrix& d() const { return d_; }

  /// C == 0: the output depends only on the current input.
  bool is_trivial() const { return c_.is_zero(); }

  friend bool operator==(const Lft&, const Lft&) = default;

 private:
  BitMatrix a_;
  BitMatrix b_;
  BitMatrix c_;
  BitMatrix d_;
};

/// Sequence of column vectors sharing one dimension.
using Word = std::vector<BitMatrix>;

struct StepResult {
  BitMatrix state;
  BitMatrix output;
};

/// One transition from state s (n x 1) on input x (l x 1).
StepResult step(const Lft& t, const BitMatrix& s, const BitMatrix& x);

/// Output word produced from state s0; the empty word maps to the empty word.
Word run(const Lft& t, const BitMatrix& s0, const Word& input);

/// State reached from s0 after reading `input`.
BitMatrix advance(const Lft& t, const BitMatrix& s0, const Word& input);

/// [C; CA; ...; CA^(n-1)], an (m n) x n matrix.
BitMatrix diagnostic_matrix(const Lft& t);

/// True iff the transposed diagnostic matrix has rank n and is already in
/// reduced row echelon form, i.e. the images of the standard state basis
/// are the standard basis of the diagnostic image. Trivial LFTs are never
/// canonical.
bool is_canonical(const Lft& t);

/// Size of the equivalence class of t among LFTs of the same l, m, n:
/// prod_{i<r}(2^n - 2^i) * 2^((n+l)(n-r)) with r the diagnostic rank.
mpz_class class_size(const Lft& t);

/// Class size for a size-n LFT with input dimension l and diagnostic rank r.
mpz_class class_size_for_rank(std::size_t l, std::size_t n, std::size_t r);

/// f(z) = det(I - Az) together with fH = C adj(I - Az) B z + f D.
struct TransferNumerator {
  PolyMatrix fh;
  Poly2 f;
};

/// Computes fH from the Markov parameters: fH = f * (D + sum_k C A^k B z^(k+1))
/// truncated at degree n, which is exact because fH has degree <= n.
TransferNumerator transfer_numerator(const Lft& t);

/// Literal evaluation through the adjugate of I - Az; slower, used as a
/// cross-check of transfer_numerator.
TransferNumerator transfer_numerator_adjugate(const Lft& t);

/// H(z) = fH / f over the localization.
FracMatrix transfer_matrix(const Lft& t);

/// z-valuations of the nonzero invariant factors of H, nondecreasing.
std::vector<int> h_valuations(const Lft& t);

/// Invariant factor profile of H clipped at z^cap. Requires cap >= 1.
InvariantFactorProfile h_invariant_profile(const Lft& t, std::size_t cap);

/// Injective with delay tau iff exactly l invariant factors of H divide z^tau.
bool is_injective_with_delay(const Lft& t, std::size_t tau);

/// Smallest tau for which t is tau-injective, or nullopt when t is not
/// injective with any delay.
std::optional<std::size_t> min_injectivity_delay(const Lft& t);

/// Raised by left_inverse_transfer when t is not injective with the requested delay.
class NotInjectiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An l x m matrix H' over the localization with H' H == z^tau I.
///
/// Built from the Smith form U fH V = diag(d'_i): with d'_i = z^(k_i) u_i and
/// u_i a unit, H' = f V diag(z^(tau - k_i) / u_i) U.
FracMatrix left_inverse_transfer(const Lft& t, std::size_t tau);

}  // namespace lft

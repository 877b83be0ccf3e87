#pragma once

#include <cstddef>
#include <vector>

#include "lft/poly2.hpp"
#include "lft/poly_matrix.hpp"

namespace lft {

/// u * original * v == diag(factors, 0, ..., 0), with u and v unimodular and
/// factors[i] | factors[i + 1].
struct SmithDecomposition {
  PolyMatrix u;
  PolyMatrix v;
  std::vector<Poly2> factors;
  std::size_t rank = 0;
};

/// Smith normal form over F2[z] with both unimodular multipliers.
///
/// Pivoting always brings a minimal-degree entry of the active block to the
/// diagonal; when the cleared pivot fails to divide some remaining entry,
/// that entry's row is folded into the pivot row and the step restarts. Every
/// elementary operation is mirrored on u (rows) or v (columns).
SmithDecomposition smith_normal_form(const PolyMatrix& m);

/// Same invariant factors as smith_normal_form, without tracking multipliers.
std::vector<Poly2> invariant_factors(const PolyMatrix& m);

/// Multiplicities of z-valuations among a matrix's invariant factors after
/// replacing each factor d by gcd(d, z^cap).
///
/// multiplicities[k] counts factors of valuation k < cap and has no trailing
/// zeros; factors of valuation >= cap are counted in `saturated`.
struct InvariantFactorProfile {
  std::vector<std::size_t> multiplicities;
  std::size_t saturated = 0;
  std::size_t rank = 0;
  std::size_t cap = 0;

  /// Number of factors dividing z^k. Requires k < cap.
  std::size_t count_at_most(std::size_t k) const;

  friend bool operator==(const InvariantFactorProfile&, const InvariantFactorProfile&) = default;
};

/// Throws std::invalid_argument if cap == 0, a factor is zero, or the list is
/// not a divisibility chain.
InvariantFactorProfile localize_invariant_factors(const std::vector<Poly2>& factors,
                                                  std::size_t cap);

/// Profile from z-valuations already known to be nondecreasing.
InvariantFactorProfile profile_from_valuations(const std::vector<int>& valuations,
                                               std::size_t cap);

}  // namespace lft

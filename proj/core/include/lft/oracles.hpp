#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lft/transducer.hpp"

namespace lft {

/// Raised when an enumeration would exceed its configured size guard.
class OracleGuardError : public std::runtime_error {
 public:
  OracleGuardError(const std::string& what, std::size_t required_log2)
      : std::runtime_error(what), required_log2_(required_log2) {}
  /// log2 of the enumeration size that was refused.
  std::size_t required_log2() const { return required_log2_; }

 private:
  std::size_t required_log2_;
};

enum class BruteForceMode {
  /// Search from state 0 for an input x.alpha with x != 0 and all-zero output.
  /// Sufficient by linearity.
  kKernel,
  /// Enumerate every state and input word of length tau + 1 and check that
  /// the output determines the first symbol.
  kDefinitional,
};

/// Definition-checked tau-injectivity by simulation. Throws OracleGuardError
/// when the enumeration exceeds 2^guard_log2 words (or when a dimension
/// exceeds 64).
bool brute_force_injective(const Lft& t, std::size_t tau,
                           BruteForceMode mode = BruteForceMode::kKernel,
                           std::size_t guard_log2 = 24);

/// Every state of t1 has an equivalent state in t2 and vice versa. States are
/// equivalent iff they produce the same output on every input word, which
/// for linear machines splits into equal free responses C A^k s and equal
/// forced responses (D and C A^k B), checked for k < n1 + n2.
///
/// Throws ShapeError if l or m differ and OracleGuardError when a state space
/// exceeds 2^guard_log2.
bool transducers_equivalent(const Lft& t1, const Lft& t2, std::size_t guard_log2 = 20);

}  // namespace lft

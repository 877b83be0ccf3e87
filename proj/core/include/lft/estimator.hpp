#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lft/bit_matrix.hpp"
#include "lft/transducer.hpp"

namespace lft {

/// Uniformly random LFT: A, B, C and D drawn in that order, each entry a fair bit.
Lft random_lft(std::size_t l, std::size_t m, std::size_t n, Rng& rng);

/// Probability that a uniform LFT with the same parameters lands in t's
/// class: class_size(t) / 2^(ml + n(l+m+n)).
mpq_class class_probability(const Lft& t);

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sample chunk `chunk` under master seed `seed`:
/// splitmix64(seed ^ splitmix64(chunk + 1)).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

/// Samples are drawn in fixed chunks of this size; chunk i uses a
/// std::mt19937_64 seeded with chunk_seed(seed, i).
inline constexpr std::size_t kSampleChunk = 256;

struct EstimateOptions {
  std::size_t l = 1;
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  /// Add the 2^(lm) trivial classes to the percentage denominator.
  bool include_trivial = false;
};

struct EstimateReport {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned long q = 2;
  std::size_t tau = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// (1/samples) * sum of 1/p over the injective draws.
  mpq_class estimate;
  std::string estimate_decimal;
  /// 100 * estimate / total_classes, present for percentage runs.
  std::optional<mpq_class> percentage;
  std::optional<std::string> percentage_decimal;
  std::optional<mpz_class> total_classes;
  bool include_trivial = false;
  std::size_t injective_hits = 0;
  double wall_seconds = 0.0;
};

/// Importance-weighted estimate of the number of tau-injective classes.
EstimateReport estimate_injective_classes(const EstimateOptions& options, std::size_t tau);

/// estimate_injective_classes divided by total_classes(l, m, n), in percent.
EstimateReport estimate_injective_percentage(const EstimateOptions& options, std::size_t tau);

/// One sample serving several delays: element k of the result is the report
/// for taus[k], identical to the corresponding single-tau call with the same
/// options.
std::vector<EstimateReport> estimate_sweep(const EstimateOptions& options,
                                           const std::vector<std::size_t>& taus,
                                           bool percentage);

/// Exact class census by enumerating every LFT.
struct CensusReport {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> taus;
  /// Canonical LFTs found among sizes 1..n; element i-1 is for size i.
  std::vector<mpz_class> canonical_by_size;
  mpz_class trivial_classes;
  mpz_class nontrivial_classes;
  /// Per tau: injective classes with a canonical representative / trivial ones.
  std::vector<mpz_class> injective_nontrivial;
  std::vector<mpz_class> injective_trivial;
  /// Per tau: sum over all size-n LFTs of [injective] / class_size, which must
  /// equal the total injective class count.
  std::vector<mpq_class> injective_weighted;
  std::uint64_t enumerated = 0;

  mpz_class injective_total(std::size_t k) const {
    return injective_nontrivial[k] + injective_trivial[k];
  }
  /// 100 * injective_total / (nontrivial_classes [+ trivial_classes]).
  mpq_class percentage(std::size_t k, bool include_trivial = false) const;
};

/// Raised when an exhaustive enumeration exceeds its guard.
class EnumerationGuardError : public std::runtime_error {
 public:
  EnumerationGuardError(const std::string& what, std::size_t required_log2)
      : std::runtime_error(what), required_log2_(required_log2) {}
  std::size_t required_log2() const { return required_log2_; }

 private:
  std::size_t required_log2_;
};

inline constexpr std::size_t kDefaultCensusGuardLog2 = 26;

/// Enumerates L(l, m, i) for i <= n. Classes are identified by their canonical
/// representative (any size up to n) plus one trivial class per D. Throws
/// EnumerationGuardError when 2^(ml + n(l+m+n)) exceeds 2^guard_log2.
CensusReport exhaustive_census(std::size_t l, std::size_t m, std::size_t n,
                               const std::vector<std::size_t>& taus,
                               std::size_t guard_log2 = kDefaultCensusGuardLog2,
                               std::size_t workers = 1);

/// Decodes enumeration index `index` into an LFT: bits fill A, B, C, D in
/// row-major order starting from the least significant bit.
Lft lft_from_index(std::size_t l, std::size_t m, std::size_t n, std::uint64_t index);

/// log2 of the number of LFTs with the given parameters.
std::size_t lft_count_log2(std::size_t l, std::size_t m, std::size_t n);

}  // namespace lft

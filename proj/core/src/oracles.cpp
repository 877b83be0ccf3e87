#include "lft/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

namespace lft {

namespace {

using Mask = std::uint64_t;

// Matrix stored as one bitmask per column, for dimensions up to 64.
struct ColumnMasks {
  std::vector<Mask> cols;

  explicit ColumnMasks(const BitMatrix& m) : cols(m.cols(), 0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) cols[c] |= Mask{1} << r;
  }

  Mask apply(Mask v) const {
    Mask out = 0;
    for (std::size_t c = 0; v != 0; ++c, v >>= 1)
      if (v & 1U) out ^= cols[c];
    return out;
  }
};

struct Simulator {
  ColumnMasks a, b, c, d;
  explicit Simulator(const Lft& t) : a(t.a()), b(t.b()), c(t.c()), d(t.d()) {}
};

void require_small(const Lft& t) {
  if (t.n() > 64 || t.l() > 64 || t.m() > 64) {
    throw OracleGuardError("dimensions above 64 are outside the oracle's range", 64);
  }
}

bool kernel_search(const Simulator& sim, std::size_t l, std::size_t depth, std::size_t tau,
                   Mask state) {
  const Mask count = Mask{1} << l;
  for (Mask x = (depth == 0 ? 1 : 0); x < count; ++x) {
    if ((sim.c.apply(state) ^ sim.d.apply(x)) != 0) continue;
    if (depth == tau) return true;
    if (kernel_search(sim, l, depth + 1, tau, sim.a.apply(state) ^ sim.b.apply(x))) return true;
  }
  return false;
}

bool definitional(const Lft& t, std::size_t tau) {
  const Simulator sim(t);
  const std::size_t len = tau + 1;
  const std::size_t word_bits = t.l() * len;
  const Mask symbol_mask = t.l() == 64 ? ~Mask{0} : (Mask{1} << t.l()) - 1;
  for (Mask s0 = 0; s0 < (Mask{1} << t.n()); ++s0) {
    // output word -> first input symbol
    std::unordered_map<std::string, Mask> first_symbol;
    for (Mask word = 0; word < (Mask{1} << word_bits); ++word) {
      std::string key;
      key.reserve(len * sizeof(Mask));
      Mask s = s0;
      for (std::size_t k = 0; k < len; ++k) {
        const Mask x = (word >> (k * t.l())) & symbol_mask;
        const Mask y = sim.c.apply(s) ^ sim.d.apply(x);
        key.append(reinterpret_cast<const char*>(&y), sizeof y);
        s = sim.a.apply(s) ^ sim.b.apply(x);
      }
      const Mask x0 = word & symbol_mask;
      auto [it, inserted] = first_symbol.emplace(std::move(key), x0);
      if (!inserted && it->second != x0) return false;
    }
  }
  return true;
}

// Packed copy of column j of m.
std::vector<Mask> column_bits(const BitMatrix& m, std::size_t j) {
  std::vector<Mask> out((m.rows() + 63) / 64, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.get(r, j)) out[r / 64] |= Mask{1} << (r % 64);
  return out;
}

// [C; CA; ...; CA^(depth-1)]
BitMatrix observability(const Lft& t, std::size_t depth) {
  BitMatrix out = t.c();
  BitMatrix block = t.c();
  for (std::size_t k = 1; k < depth; ++k) {
    block = multiply(block, t.a());
    out = stack(out, block);
  }
  return out;
}

// [D; CB; CAB; ...; CA^(depth-1)B]
BitMatrix forced_response(const Lft& t, std::size_t depth) {
  BitMatrix out = t.d();
  BitMatrix ak_b = t.b();
  for (std::size_t k = 0; k < depth; ++k) {
    out = stack(out, multiply(t.c(), ak_b));
    ak_b = multiply(t.a(), ak_b);
  }
  return out;
}

// All free-response signatures of t, enumerating states in Gray-code order.
std::set<std::vector<Mask>> free_responses(const Lft& t, std::size_t depth) {
  const BitMatrix obs = observability(t, depth);
  std::vector<std::vector<Mask>> basis;
  for (std::size_t j = 0; j < t.n(); ++j) basis.push_back(column_bits(obs, j));
  std::set<std::vector<Mask>> out;
  std::vector<Mask> sig(basis.front().size(), 0);
  out.insert(sig);
  for (Mask i = 1; i < (Mask{1} << t.n()); ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t w = 0; w < sig.size(); ++w) sig[w] ^= basis[j][w];
    out.insert(sig);
  }
  return out;
}

}  // namespace

bool brute_force_injective(const Lft& t, std::size_t tau, BruteForceMode mode,
                           std::size_t guard_log2) {
  require_small(t);
  const std::size_t words_log2 = t.l() * (tau + 1);
  if (mode == BruteForceMode::kKernel) {
    if (words_log2 > guard_log2) {
      throw OracleGuardError("injectivity oracle needs 2^" + std::to_string(words_log2) +
                                 " input words, above the guard",
                             words_log2);
    }
    return !kernel_search(Simulator(t), t.l(), 0, tau, 0);
  }
  const std::size_t total_log2 = words_log2 + t.n();
  if (total_log2 > guard_log2 || total_log2 >= 63) {
    throw OracleGuardError("definitional oracle needs 2^" + std::to_string(total_log2) +
                               " (state, word) pairs, above the guard",
                           total_log2);
  }
  return definitional(t, tau);
}

bool transducers_equivalent(const Lft& t1, const Lft& t2, std::size_t guard_log2) {
  if (t1.l() != t2.l() || t1.m() != t2.m()) {
    throw ShapeError("equivalence requires equal input and output dimensions");
  }
  const std::size_t largest = std::max(t1.n(), t2.n());
  if (largest > guard_log2 || largest >= 63) {
    throw OracleGuardError("equivalence oracle needs 2^" + std::to_string(largest) + " states",
                           largest);
  }
  const std::size_t depth = t1.n() + t2.n();
  if (forced_response(t1, depth) != forced_response(t2, depth)) return false;
  return free_responses(t1, depth) == free_responses(t2, depth);
}

}  // namespace lft

#include "lft/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace lft {

namespace {

struct Reducer {
  PolyMatrix a;
  PolyMatrix* u = nullptr;
  PolyMatrix* v = nullptr;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Poly2& q) {
    a.add_row_multiple(dst, src, q);
    if (u) u->add_row_multiple(dst, src, q);
  }
  void add_col(std::size_t dst, std::size_t src, const Poly2& q) {
    a.add_col_multiple(dst, src, q);
    if (v) v->add_col_multiple(dst, src, q);
  }

  // Position of a minimal-degree nonzero entry in the block [t.., t..].
  std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Poly2& e = a.at(i, j);
        if (e.is_zero()) continue;
        const int d = e.degree();
        if (!best || d < best_deg) {
          best = {i, j};
          best_deg = d;
          if (d == 0) return best;
        }
      }
    return best;
  }

  // Eliminates column t below and row t right of the pivot. Returns false if
  // some remainder was left behind.
  bool clear_cross(std::size_t t) {
    const Poly2 pivot = a.at(t, t);
    const bool unit = pivot.is_one();
    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a.at(i, t).is_zero()) continue;
      if (unit) {
        add_row(i, t, Poly2(a.at(i, t)));
      } else {
        auto [q, r] = divmod(a.at(i, t), pivot);
        add_row(i, t, q);
        clean = clean && r.is_zero();
      }
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a.at(t, j).is_zero()) continue;
      if (unit) {
        add_col(j, t, Poly2(a.at(t, j)));
      } else {
        auto [q, r] = divmod(a.at(t, j), pivot);
        add_col(j, t, q);
        clean = clean && r.is_zero();
      }
    }
    return clean;
  }

  // Row index of an entry in the block [t+1.., t+1..] not divisible by the pivot.
  std::optional<std::size_t> find_non_divisible(std::size_t t) const {
    const Poly2& pivot = a.at(t, t);
    if (pivot.is_one()) return std::nullopt;
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (!a.at(i, j).is_zero() && !divides(pivot, a.at(i, j))) return i;
    return std::nullopt;
  }

  std::vector<Poly2> run() {
    std::vector<Poly2> factors;
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      bool settled = false;
      while (!settled) {
        const auto pos = min_entry(t);
        if (!pos) return factors;
        swap_rows(t, pos->first);
        swap_cols(t, pos->second);
        if (!clear_cross(t)) continue;
        if (const auto row = find_non_divisible(t)) {
          add_row(t, *row, Poly2::one());
          continue;
        }
        settled = true;
      }
      factors.push_back(a.at(t, t));
    }
    return factors;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
  SmithDecomposition out{PolyMatrix::identity(m.rows()), PolyMatrix::identity(m.cols()), {}, 0};
  Reducer reducer{m, &out.u, &out.v};
  out.factors = reducer.run();
  out.rank = out.factors.size();
  return out;
}

std::vector<Poly2> invariant_factors(const PolyMatrix& m) {
  Reducer reducer{m};
  return reducer.run();
}

std::size_t InvariantFactorProfile::count_at_most(std::size_t k) const {
  if (k >= cap) throw std::out_of_range("count_at_most: k must be below the cap");
  std::size_t total = 0;
  for (std::size_t i = 0; i <= k && i < multiplicities.size(); ++i) total += multiplicities[i];
  return total;
}

InvariantFactorProfile profile_from_valuations(const std::vector<int>& valuations,
                                               std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("localization cap must be at least 1");
  InvariantFactorProfile p;
  p.cap = cap;
  p.rank = valuations.size();
  for (int v : valuations) {
    const auto k = static_cast<std::size_t>(v);
    if (k >= cap) {
      ++p.saturated;
      continue;
    }
    if (p.multiplicities.size() <= k) p.multiplicities.resize(k + 1, 0);
    ++p.multiplicities[k];
  }
  return p;
}

InvariantFactorProfile localize_invariant_factors(const std::vector<Poly2>& factors,
                                                  std::size_t cap) {
  std::vector<int> valuations;
  valuations.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_zero()) throw std::invalid_argument("invariant factors must be nonzero");
    if (i > 0 && !divides(factors[i - 1], factors[i])) {
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
    valuations.push_back(factors[i].z_valuation());
  }
  return profile_from_valuations(valuations, cap);
}

}  // namespace lft

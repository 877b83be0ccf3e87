#include "lft/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "lft/census.hpp"
#include "lft/decimal.hpp"

namespace lft {

Lft random_lft(std::size_t l, std::size_t m, std::size_t n, Rng& rng) {
  BitMatrix a = random_matrix(n, n, rng);
  BitMatrix b = random_matrix(n, l, rng);
  BitMatrix c = random_matrix(m, n, rng);
  BitMatrix d = random_matrix(m, l, rng);
  return Lft(std::move(a), std::move(b), std::move(c), std::move(d));
}

std::size_t lft_count_log2(std::size_t l, std::size_t m, std::size_t n) {
  return m * l + n * (l + m + n);
}

mpq_class class_probability(const Lft& t) {
  mpq_class p(class_size(t), power(2, lft_count_log2(t.l(), t.m(), t.n())));
  p.canonicalize();
  return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ splitmix64(chunk + 1));
}

namespace {

// hits[k][r]: injective draws at taus[k] whose diagnostic matrix has rank r.
using RankTally = std::vector<std::vector<std::uint64_t>>;

RankTally empty_tally(std::size_t tau_count, std::size_t n) {
  return RankTally(tau_count, std::vector<std::uint64_t>(n + 1, 0));
}

void tally_lft(const Lft& t, const std::vector<std::size_t>& taus, RankTally& tally) {
  const auto delay = min_injectivity_delay(t);
  if (!delay) return;
  std::optional<std::size_t> r;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    if (*delay > taus[k]) continue;
    if (!r) r = rank(diagnostic_matrix(t));
    ++tally[k][*r];
  }
}

void merge_into(RankTally& total, const RankTally& part) {
  for (std::size_t k = 0; k < total.size(); ++k)
    for (std::size_t r = 0; r < total[k].size(); ++r) total[k][r] += part[k][r];
}

// sum_r hits[r] / class_size(r), exact.
mpq_class weighted_sum(const std::vector<std::uint64_t>& hits, std::size_t l, std::size_t n) {
  mpq_class acc = 0;
  for (std::size_t r = 0; r < hits.size(); ++r) {
    if (hits[r] == 0) continue;
    mpq_class term(mpz_class(static_cast<unsigned long>(hits[r])), class_size_for_rank(l, n, r));
    term.canonicalize();
    acc += term;
  }
  return acc;
}

// Runs `job(i)` for i in [0, count) over `workers` threads; job results must
// not depend on which thread runs them.
template <typename Job>
void parallel_for(std::size_t count, std::size_t workers, Job job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
}

void validate(const EstimateOptions& o) {
  if (o.l == 0 || o.m == 0 || o.n == 0) throw std::invalid_argument("l, m and n must be positive");
  if (o.samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (lft_count_log2(o.l, o.m, o.n) > 100000) throw std::invalid_argument("parameters too large");
}

}  // namespace

std::vector<EstimateReport> estimate_sweep(const EstimateOptions& options,
                                           const std::vector<std::size_t>& taus,
                                           bool percentage) {
  validate(options);
  if (taus.empty()) throw std::invalid_argument("at least one delay is required");
  const auto start = std::chrono::steady_clock::now();

  const std::size_t chunks = (options.samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<RankTally> per_chunk(chunks);
  parallel_for(chunks, options.workers, [&](std::size_t chunk) {
    Rng rng(chunk_seed(options.seed, chunk));
    const std::size_t begin = chunk * kSampleChunk;
    const std::size_t count = std::min(kSampleChunk, options.samples - begin);
    RankTally tally = empty_tally(taus.size(), options.n);
    for (std::size_t s = 0; s < count; ++s) {
      tally_lft(random_lft(options.l, options.m, options.n, rng), taus, tally);
    }
    per_chunk[chunk] = std::move(tally);
  });
  RankTally total = empty_tally(taus.size(), options.n);
  for (const auto& part : per_chunk) merge_into(total, part);

  const mpz_class population = power(2, lft_count_log2(options.l, options.m, options.n));
  std::optional<mpz_class> classes;
  if (percentage) {
    classes = total_classes({options.l, options.m, options.n, 2}, options.n, options.include_trivial);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<EstimateReport> reports;
  reports.reserve(taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k) {
    EstimateReport rep;
    rep.l = options.l;
    rep.m = options.m;
    rep.n = options.n;
    rep.tau = taus[k];
    rep.samples = options.samples;
    rep.seed = options.seed;
    rep.include_trivial = options.include_trivial;
    rep.estimate = weighted_sum(total[k], options.l, options.n) * mpq_class(population) /
                   mpq_class(mpz_class(static_cast<unsigned long>(options.samples)));
    rep.estimate.canonicalize();
    rep.estimate_decimal = to_scientific(rep.estimate, 6);
    for (auto h : total[k]) rep.injective_hits += h;
    if (classes) {
      mpq_class pct = 100 * rep.estimate / mpq_class(*classes);
      pct.canonicalize();
      rep.percentage = pct;
      rep.percentage_decimal = to_fixed(pct, 4);
      rep.total_classes = *classes;
    }
    rep.wall_seconds = seconds;
    reports.push_back(std::move(rep));
  }
  return reports;
}

EstimateReport estimate_injective_classes(const EstimateOptions& options, std::size_t tau) {
  return estimate_sweep(options, {tau}, false).front();
}

EstimateReport estimate_injective_percentage(const EstimateOptions& options, std::size_t tau) {
  return estimate_sweep(options, {tau}, true).front();
}

Lft lft_from_index(std::size_t l, std::size_t m, std::size_t n, std::uint64_t index) {
  if (lft_count_log2(l, m, n) > 64) throw std::invalid_argument("index space exceeds 64 bits");
  std::size_t bit = 0;
  auto fill = [&](std::size_t rows, std::size_t cols) {
    BitMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c, ++bit)
        if ((index >> bit) & 1U) out.set(r, c, true);
    return out;
  };
  BitMatrix a = fill(n, n);
  BitMatrix b = fill(n, l);
  BitMatrix c = fill(m, n);
  BitMatrix d = fill(m, l);
  return Lft(std::move(a), std::move(b), std::move(c), std::move(d));
}

mpq_class CensusReport::percentage(std::size_t k, bool include_trivial) const {
  mpz_class denom = nontrivial_classes;
  if (include_trivial) denom += trivial_classes;
  mpq_class pct(100 * injective_total(k), denom);
  pct.canonicalize();
  return pct;
}

namespace {

struct CensusTally {
  std::uint64_t canonical = 0;
  std::vector<std::uint64_t> canonical_injective;
  RankTally weighted;
};

}  // namespace

CensusReport exhaustive_census(std::size_t l, std::size_t m, std::size_t n,
                               const std::vector<std::size_t>& taus, std::size_t guard_log2,
                               std::size_t workers) {
  if (l == 0 || m == 0 || n == 0) throw std::invalid_argument("l, m and n must be positive");
  const std::size_t need = lft_count_log2(l, m, n);
  if (need > guard_log2 || need > 62) {
    throw EnumerationGuardError("exhaustive census needs 2^" + std::to_string(need) +
                                    " LFTs, above the guard of 2^" + std::to_string(guard_log2),
                                need);
  }

  CensusReport rep;
  rep.l = l;
  rep.m = m;
  rep.n = n;
  rep.taus = taus;
  rep.injective_nontrivial.assign(taus.size(), 0);
  rep.injective_trivial.assign(taus.size(), 0);
  rep.injective_weighted.assign(taus.size(), 0);
  RankTally weighted = empty_tally(taus.size(), n);

  constexpr std::uint64_t kBlock = 1U << 12;
  for (std::size_t size = 1; size <= n; ++size) {
    const std::uint64_t population = std::uint64_t{1} << lft_count_log2(l, m, size);
    const bool full = size == n;
    const std::size_t blocks = static_cast<std::size_t>((population + kBlock - 1) / kBlock);
    std::vector<CensusTally> parts(blocks);
    parallel_for(blocks, workers, [&](std::size_t block) {
      CensusTally part{0, std::vector<std::uint64_t>(taus.size(), 0),
                       empty_tally(taus.size(), n)};
      const std::uint64_t begin = block * kBlock;
      const std::uint64_t end = std::min(population, begin + kBlock);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const Lft t = lft_from_index(l, m, size, idx);
        const bool canonical = is_canonical(t);
        if (!canonical && !full) continue;
        const auto delay = min_injectivity_delay(t);
        if (canonical) {
          ++part.canonical;
          for (std::size_t k = 0; k < taus.size(); ++k)
            if (delay && *delay <= taus[k]) ++part.canonical_injective[k];
        }
        if (full && delay) {
          const std::size_t r = rank(diagnostic_matrix(t));
          for (std::size_t k = 0; k < taus.size(); ++k)
            if (*delay <= taus[k]) ++part.weighted[k][r];
        }
      }
      parts[block] = std::move(part);
    });
    mpz_class canonical = 0;
    for (const auto& part : parts) {
      canonical += static_cast<unsigned long>(part.canonical);
      for (std::size_t k = 0; k < taus.size(); ++k) {
        rep.injective_nontrivial[k] += static_cast<unsigned long>(part.canonical_injective[k]);
      }
      if (full) merge_into(weighted, part.weighted);
    }
    rep.canonical_by_size.push_back(canonical);
    rep.nontrivial_classes += canonical;
    rep.enumerated += population;
  }

  // One trivial class per output matrix D; any member represents it.
  const std::uint64_t d_count = std::uint64_t{1} << (l * m);
  for (std::uint64_t idx = 0; idx < d_count; ++idx) {
    BitMatrix d(m, l);
    for (std::size_t bit = 0; bit < l * m; ++bit)
      if ((idx >> bit) & 1U) d.set(bit / l, bit % l, true);
    const Lft t(BitMatrix(n, n), BitMatrix(n, l), BitMatrix(m, n), std::move(d));
    const auto delay = min_injectivity_delay(t);
    for (std::size_t k = 0; k < taus.size(); ++k)
      if (delay && *delay <= taus[k]) rep.injective_trivial[k] += 1;
  }
  rep.trivial_classes = static_cast<unsigned long>(d_count);

  for (std::size_t k = 0; k < taus.size(); ++k) {
    rep.injective_weighted[k] = weighted_sum(weighted[k], l, n);
  }
  return rep;
}

}  // namespace lft

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lft/bit_matrix.hpp"
#include "lft/census.hpp"
#include "lft/estimator.hpp"
#include "lft/smith.hpp"
#include "lft/transducer.hpp"

namespace {

using namespace lft;

void BM_Rank(benchmark::State& state) {
  Rng rng(1);
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(size, size, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(4)->Range(8, 512);

void BM_Multiply(benchmark::State& state) {
  Rng rng(2);
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(size, size, rng);
  const auto b = random_matrix(size, size, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(8, 256);

PolyMatrix random_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, int degree) {
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Poly2::from_bits(rng() & ((Poly2::Word{1} << (degree + 1)) - 1));
  return m;
}

void BM_SmithTracked(benchmark::State& state) {
  Rng rng(3);
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<PolyMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_poly_matrix(rng, size, size, 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SmithTracked)->DenseRange(2, 6, 2);

void BM_InvariantFactors(benchmark::State& state) {
  Rng rng(3);
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<PolyMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_poly_matrix(rng, size, size, 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_InvariantFactors)->DenseRange(2, 6, 2);

// One injectivity decision on a random l=2, m=5 machine of size n.
void BM_MinDelay(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Lft> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_lft(2, 5, n, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(min_injectivity_delay(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_MinDelay)->DenseRange(1, 10, 3);

void BM_TransferMarkov(benchmark::State& state) {
  Rng rng(5);
  const auto t = random_lft(2, 5, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_numerator(t));
}
BENCHMARK(BM_TransferMarkov)->DenseRange(2, 10, 4);

void BM_TransferAdjugate(benchmark::State& state) {
  Rng rng(5);
  const auto t = random_lft(2, 5, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_numerator_adjugate(t));
}
BENCHMARK(BM_TransferAdjugate)->DenseRange(2, 10, 4);

void BM_EstimatorSamples(benchmark::State& state) {
  EstimateOptions o;
  o.l = 2;
  o.m = 5;
  o.n = static_cast<std::size_t>(state.range(0));
  o.samples = 1024;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_injective_classes(o, 10));
    ++o.seed;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(o.samples));
}
BENCHMARK(BM_EstimatorSamples)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CountCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ct_canonical_count({5, 5, n, 2}));
}
BENCHMARK(BM_CountCanonical)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();

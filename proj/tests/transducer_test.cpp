#include <map>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lft/estimator.hpp"
#include "lft/oracles.hpp"
#include "lft/transducer.hpp"
#include "naive.hpp"

namespace lft {
namespace {

using testing::column;
using testing::make_lft;

Poly2 P(const char* bits) { return Poly2::parse(bits); }

Lft random_small(std::mt19937_64& rng, std::size_t max_l, std::size_t max_m, std::size_t max_n) {
  return random_lft(1 + rng() % max_l, 1 + rng() % max_m, 1 + rng() % max_n, rng);
}

TEST(Lft, ShapeValidation) {
  EXPECT_THROW(make_lft({"0"}, {"1"}, {"10"}, {"0"}), ShapeError);
  EXPECT_THROW(make_lft({"00", "00"}, {"1"}, {"10"}, {"0"}), ShapeError);
  EXPECT_THROW(make_lft({"00", "00"}, {"1", "0"}, {"10"}, {"00"}), ShapeError);
  const auto t = make_lft({"00", "00"}, {"10", "01"}, {"11"}, {"01"});
  EXPECT_EQ(t.l(), 2u);
  EXPECT_EQ(t.m(), 1u);
  EXPECT_EQ(t.n(), 2u);
}

TEST(Simulation, StepExamples) {
  std::mt19937_64 rng(1);
  const auto t = random_lft(2, 3, 4, rng);
  const auto r = step(t, BitMatrix(4, 1), BitMatrix(2, 1));
  EXPECT_TRUE(r.state.is_zero());
  EXPECT_TRUE(r.output.is_zero());

  const auto u = step(testing::unit_delay(), column("0"), column("1"));
  EXPECT_EQ(u.state, column("1"));
  EXPECT_EQ(u.output, column("0"));
  EXPECT_THROW(step(t, column("01"), column("01")), ShapeError);
}

TEST(Simulation, StepMatchesNaive) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_lft(2, 2, 3, rng);
    const auto s = random_matrix(3, 1, rng);
    const auto x = random_matrix(2, 1, rng);
    const auto r = step(t, s, x);
    EXPECT_EQ(r.state, testing::naive_multiply(t.a(), s) + testing::naive_multiply(t.b(), x));
    EXPECT_EQ(r.output, testing::naive_multiply(t.c(), s) + testing::naive_multiply(t.d(), x));
  }
}

TEST(Simulation, RunExamples) {
  const auto t = testing::unit_delay();
  EXPECT_TRUE(run(t, column("0"), {}).empty());
  const auto y = run(t, column("0"), {column("1"), column("0"), column("1")});
  EXPECT_EQ(y, (Word{column("0"), column("1"), column("0")}));
}

TEST(Simulation, RunConcatenates) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_lft(2, 3, 3, rng);
    const auto s = random_matrix(3, 1, rng);
    Word alpha, beta;
    for (int i = 0; i < 3; ++i) alpha.push_back(random_matrix(2, 1, rng));
    for (int i = 0; i < 4; ++i) beta.push_back(random_matrix(2, 1, rng));
    Word both = alpha;
    both.insert(both.end(), beta.begin(), beta.end());
    Word expect = run(t, s, alpha);
    const Word tail = run(t, advance(t, s, alpha), beta);
    expect.insert(expect.end(), tail.begin(), tail.end());
    EXPECT_EQ(run(t, s, both), expect);
  }
}

TEST(Diagnostic, Examples) {
  std::mt19937_64 rng(4);
  const auto t = random_lft(2, 3, 1, rng);
  EXPECT_EQ(diagnostic_matrix(t), t.c());
  EXPECT_EQ(diagnostic_matrix(testing::unit_delay()), BitMatrix::from_rows({"1"}));
  // Swap register: CA moves the observed bit.
  const auto swap = make_lft({"01", "10"}, {"1", "0"}, {"10"}, {"0"});
  EXPECT_EQ(diagnostic_matrix(swap), BitMatrix::identity(2));
  const auto wide = make_lft({"11", "01"}, {"1", "1"}, {"10", "01"}, {"0", "1"});
  EXPECT_EQ(diagnostic_matrix(wide), BitMatrix::from_rows({"10", "01", "11", "01"}));
}

TEST(Diagnostic, RankMatchesDoublingStack) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_small(rng, 3, 3, 6);
    EXPECT_EQ(rank(diagnostic_matrix(t)), rank(testing::doubling_stack(t)));
  }
}

TEST(Canonical, Examples) {
  for (const char* a : {"0", "1"})
    for (const char* b : {"0", "1"})
      for (const char* d : {"0", "1"}) {
        EXPECT_TRUE(is_canonical(make_lft({a}, {b}, {"1"}, {d})));
        EXPECT_FALSE(is_canonical(make_lft({a}, {b}, {"0"}, {d})));
      }
  // Delta^T = [[1,0],[1,1]] is full rank but not reduced.
  const auto t = make_lft({"00", "01"}, {"0", "0"}, {"11"}, {"0"});
  EXPECT_EQ(transpose(diagnostic_matrix(t)), BitMatrix::from_rows({"10", "11"}));
  EXPECT_FALSE(is_canonical(t));
}

TEST(Canonical, ImpliesMinimal) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto t = random_small(rng, 2, 2, 3);
    if (is_canonical(t)) EXPECT_EQ(rank(diagnostic_matrix(t)), t.n());
  }
}

TEST(ClassSize, Examples) {
  EXPECT_EQ(class_size(testing::unit_delay()), 1);
  EXPECT_EQ(class_size(make_lft({"1"}, {"0"}, {"0"}, {"1"})), 4);
  EXPECT_EQ(class_size_for_rank(2, 3, 3), 168);
  EXPECT_THROW(class_size_for_rank(1, 2, 3), std::invalid_argument);
}

TEST(ClassSize, PartitionOfSizeOne) {
  // Group all 16 LFTs at l=m=n=1 by equivalence and compare with class_size.
  std::vector<Lft> all;
  for (std::uint64_t i = 0; i < 16; ++i) all.push_back(lft_from_index(1, 1, 1, i));
  std::vector<int> cls(all.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (transducers_equivalent(all[i], all[j])) cls[j] = classes;
    ++classes;
  }
  EXPECT_EQ(classes, 10);
  std::map<int, int> sizes;
  for (int c : cls) ++sizes[c];
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(class_size(all[i]), sizes[cls[i]]);
}

TEST(Transfer, UnitDelay) {
  const auto tn = transfer_numerator(testing::unit_delay());
  EXPECT_EQ(tn.f, Poly2::one());
  EXPECT_EQ(tn.fh.at(0, 0), P("01"));
}

TEST(Transfer, NoInputCouplingGivesD) {
  std::mt19937_64 rng(7);
  const auto r = random_lft(2, 3, 3, rng);
  const Lft t(r.a(), BitMatrix(3, 2), r.c(), r.d());
  const auto tn = transfer_numerator(t);
  EXPECT_EQ(tn.fh, tn.f * PolyMatrix::from_bits(t.d()));
  const auto h = transfer_matrix(t);
  EXPECT_EQ(h, FracMatrix::from_poly(PolyMatrix::from_bits(t.d())));
}

TEST(Transfer, ConstantTermIsD) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_small(rng, 3, 3, 5);
    const auto tn = transfer_numerator(t);
    EXPECT_TRUE(tn.f.constant_term());
    for (std::size_t i = 0; i < t.m(); ++i)
      for (std::size_t j = 0; j < t.l(); ++j) EXPECT_EQ(tn.fh.at(i, j).coeff(0), t.d().get(i, j));
  }
}

TEST(Transfer, MarkovRouteMatchesAdjugate) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_small(rng, 3, 3, 6);
    const auto fast = transfer_numerator(t);
    const auto slow = transfer_numerator_adjugate(t);
    EXPECT_EQ(fast.f, slow.f);
    EXPECT_EQ(fast.fh, slow.fh);
  }
}

TEST(Profile, Examples) {
  const auto u = h_invariant_profile(testing::unit_delay(), 2);
  EXPECT_EQ(u.multiplicities, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(u.rank, 1u);

  const auto id = h_invariant_profile(testing::identity_lft(3, 2), 2);
  EXPECT_EQ(id.multiplicities, (std::vector<std::size_t>{3}));

  const auto zero = h_invariant_profile(testing::zero_output(2, 2, 2), 3);
  EXPECT_TRUE(zero.multiplicities.empty());
  EXPECT_EQ(zero.rank, 0u);

  // Two independent unit delays: H = z I.
  const auto shift = make_lft({"00", "00"}, {"10", "01"}, {"10", "01"}, {"00", "00"});
  EXPECT_EQ(h_invariant_profile(shift, 2).multiplicities, (std::vector<std::size_t>{0, 2}));
}

TEST(Injectivity, Examples) {
  EXPECT_TRUE(is_injective_with_delay(testing::identity_lft(2), 0));
  EXPECT_FALSE(is_injective_with_delay(testing::unit_delay(), 0));
  EXPECT_TRUE(is_injective_with_delay(testing::unit_delay(), 1));
  for (std::size_t tau = 0; tau < 6; ++tau)
    EXPECT_FALSE(is_injective_with_delay(testing::zero_output(1, 2, 2), tau));
  EXPECT_EQ(min_injectivity_delay(testing::identity_lft(2)), 0u);
  EXPECT_EQ(min_injectivity_delay(testing::unit_delay()), 1u);
  EXPECT_EQ(min_injectivity_delay(testing::zero_output(1, 1, 1)), std::nullopt);
}

TEST(Injectivity, MoreInputsThanOutputsNeverInjective) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_EQ(min_injectivity_delay(random_lft(3, 2, 1 + rng() % 4, rng)), std::nullopt);
  }
}

TEST(Injectivity, MonotoneAndMinimal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_small(rng, 2, 3, 4);
    const auto delay = min_injectivity_delay(t);
    for (std::size_t tau = 0; tau <= 6; ++tau) {
      const bool expect = delay && tau >= *delay;
      EXPECT_EQ(is_injective_with_delay(t, tau), expect);
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_TRUE(brute_force_injective(testing::identity_lft(1), 0));
  EXPECT_FALSE(brute_force_injective(testing::unit_delay(), 0));
  EXPECT_TRUE(brute_force_injective(testing::unit_delay(), 1));
  EXPECT_THROW(brute_force_injective(testing::identity_lft(3), 20, BruteForceMode::kKernel, 24),
               OracleGuardError);
}

TEST(BruteForce, ModesAgree) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_small(rng, 2, 2, 3);
    for (std::size_t tau = 0; tau <= 2; ++tau) {
      EXPECT_EQ(brute_force_injective(t, tau, BruteForceMode::kKernel),
                brute_force_injective(t, tau, BruteForceMode::kDefinitional));
    }
  }
}

TEST(BruteForce, AgreesWithSmithOnRandom) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = random_small(rng, 3, 3, 4);
    for (std::size_t tau = 0; tau <= 4; ++tau)
      EXPECT_EQ(is_injective_with_delay(t, tau), brute_force_injective(t, tau));
  }
}

TEST(LeftInverse, Examples) {
  EXPECT_EQ(left_inverse_transfer(testing::identity_lft(2), 0), FracMatrix::identity(2));
  EXPECT_EQ(left_inverse_transfer(testing::unit_delay(), 1), FracMatrix::identity(1));
  EXPECT_THROW(left_inverse_transfer(testing::unit_delay(), 0), NotInjectiveError);
  EXPECT_THROW(left_inverse_transfer(testing::zero_output(1, 1, 1), 3), NotInjectiveError);
}

TEST(LeftInverse, DefiningIdentity) {
  std::mt19937_64 rng(14);
  int checked = 0;
  while (checked < 60) {
    const auto t = random_small(rng, 3, 3, 4);
    const auto delay = min_injectivity_delay(t);
    if (!delay) continue;
    ++checked;
    for (std::size_t tau : {*delay, *delay + 2}) {
      const auto h = transfer_matrix(t);
      FracMatrix target(t.l(), t.l());
      for (std::size_t i = 0; i < t.l(); ++i)
        target.at(i, i) = LocalFrac(Poly2::monomial(static_cast<int>(tau)));
      EXPECT_EQ(left_inverse_transfer(t, tau) * h, target);
    }
  }
}

TEST(Equivalence, Examples) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_small(rng, 2, 2, 3);
    EXPECT_TRUE(transducers_equivalent(t, t));
  }
  EXPECT_TRUE(transducers_equivalent(make_lft({"1"}, {"0"}, {"0"}, {"1"}),
                                     make_lft({"01", "11"}, {"1", "1"}, {"00"}, {"1"})));
  EXPECT_FALSE(transducers_equivalent(make_lft({"1"}, {"0"}, {"0"}, {"1"}),
                                      make_lft({"1"}, {"0"}, {"0"}, {"0"})));
  EXPECT_THROW(transducers_equivalent(testing::identity_lft(1), testing::identity_lft(2)),
               ShapeError);
}

TEST(Equivalence, MinimalRealizationOfDelay) {
  // A 2-state machine that only ever shows the previous input is equivalent
  // to the 1-state unit delay.
  const auto padded = make_lft({"00", "00"}, {"1", "0"}, {"10"}, {"0"});
  EXPECT_TRUE(transducers_equivalent(padded, testing::unit_delay()));
  EXPECT_FALSE(transducers_equivalent(padded, testing::identity_lft(1)));
}

}  // namespace
}  // namespace lft

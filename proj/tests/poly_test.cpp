#include <random>

#include <gtest/gtest.h>

#include "lft/local_frac.hpp"
#include "lft/poly2.hpp"
#include "lft/poly_matrix.hpp"
#include "naive.hpp"

namespace lft {
namespace {

Poly2 P(const char* bits) { return Poly2::parse(bits); }

TEST(Poly2, CanonicalForm) {
  EXPECT_TRUE(Poly2().is_zero());
  EXPECT_EQ(Poly2().degree(), Poly2::kDegreeOfZero);
  EXPECT_EQ(P("0100"), P("01"));
  EXPECT_EQ(P("0000"), Poly2::zero());
  EXPECT_EQ(P("011").degree(), 2);
  EXPECT_EQ(P("011").to_string(), "011");
  Poly2 p = P("1001");
  p.set_coeff(3, false);
  EXPECT_EQ(p, Poly2::one());
  EXPECT_EQ(p.word_count(), 1u);
}

TEST(Poly2, ArithmeticInCharacteristicTwo) {
  EXPECT_TRUE((P("11") + P("11")).is_zero());
  EXPECT_EQ(P("11") * P("11"), P("101"));  // (1+z)^2 = 1+z^2
  EXPECT_EQ(P("01") * P("101"), P("0101"));
}

TEST(Poly2, MultiplyAcrossWordBoundary) {
  const Poly2 a = Poly2::monomial(63) + Poly2::one();
  const Poly2 b = Poly2::monomial(70) + Poly2::monomial(1);
  Poly2 expect = Poly2::monomial(133) + Poly2::monomial(64) + Poly2::monomial(70) +
                 Poly2::monomial(1);
  EXPECT_EQ(a * b, expect);
  EXPECT_EQ((a * b).degree(), 133);
}

TEST(Poly2, DivmodReconstructs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly2 a = testing::random_poly(rng, 1 + rng() % 150);
    Poly2 b = testing::random_poly(rng, rng() % 80);
    if (b.is_zero()) b = Poly2::one();
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(P("1"), Poly2::zero()), std::domain_error);
}

TEST(Poly2, GcdExamples) {
  EXPECT_EQ(gcd(P("011"), P("01")), P("01"));
  EXPECT_EQ(gcd(P("1101"), Poly2::one()), Poly2::one());
  EXPECT_EQ(gcd(P("0101"), P("101")), P("101"));
  EXPECT_EQ(gcd(Poly2::zero(), P("11")), P("11"));
  EXPECT_THROW(gcd(Poly2::zero(), Poly2::zero()), std::domain_error);
}

TEST(Poly2, GcdDividesBoth) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly2 c = testing::random_poly(rng, 5);
    const Poly2 a = c * testing::random_poly(rng, 6);
    const Poly2 b = c * testing::random_poly(rng, 6);
    if (a.is_zero() && b.is_zero()) continue;
    const Poly2 g = gcd(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    if (!c.is_zero()) EXPECT_TRUE(divides(c, g));
    EXPECT_EQ(g, testing::euclid_gcd(a, b));
  }
}

TEST(Poly2, ZValuation) {
  EXPECT_EQ(P("0011").z_valuation(), 2);
  EXPECT_EQ(P("11").z_valuation(), 0);
  EXPECT_THROW(Poly2::zero().z_valuation(), std::domain_error);
  EXPECT_EQ(Poly2::monomial(130).z_valuation(), 130);
}

TEST(Poly2, Shifts) {
  EXPECT_EQ(P("11").shifted_up(3), P("00011"));
  EXPECT_EQ(P("00011").shifted_down(3), P("11"));
  EXPECT_EQ(Poly2::monomial(5).shifted_up(100), Poly2::monomial(105));
}

TEST(LocalFrac, ExamplesFromCharacteristicTwo) {
  const LocalFrac a(P("01"), P("11"));
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ(LocalFrac(Poly2::one(), P("11")) * LocalFrac(P("11")), LocalFrac(Poly2::one()));
  EXPECT_THROW(LocalFrac(Poly2::one()) / LocalFrac(P("01")), NotInvertibleError);
  EXPECT_THROW(LocalFrac(Poly2::one(), P("01")), NotInvertibleError);
}

TEST(LocalFrac, StoredReduced) {
  const LocalFrac f(P("011"), P("11"));  // z(1+z)/(1+z)
  EXPECT_EQ(f.num(), P("01"));
  EXPECT_EQ(f.den(), Poly2::one());
  EXPECT_EQ(LocalFrac(Poly2::zero(), P("111")).den(), Poly2::one());
}

TEST(LocalFrac, DivisionByUnitRoundTrips) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Poly2 d1 = testing::random_poly(rng, 4), d2 = testing::random_poly(rng, 4);
    d1.set_coeff(0, true);
    d2.set_coeff(0, true);
    const LocalFrac x(testing::random_poly(rng, 5), d1);
    Poly2 un = testing::random_poly(rng, 3);
    un.set_coeff(0, true);
    const LocalFrac unit(un, d2);
    EXPECT_EQ((x / unit) * unit, x);
    EXPECT_EQ(x - x, LocalFrac());
  }
}

TEST(PolyMatrix, DetExamples) {
  EXPECT_EQ(det(PolyMatrix::identity(4)), Poly2::one());
  EXPECT_EQ(det(PolyMatrix::diagonal(2, 2, {P("01"), P("11")})), P("011"));
  EXPECT_THROW(det(PolyMatrix(2, 3)), ShapeError);
}

TEST(PolyMatrix, DetMethodsAgree) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = testing::random_poly_matrix(rng, n, n, 3);
    const Poly2 reference = testing::laplace_det(m);
    EXPECT_EQ(det_cofactor(m), reference);
    EXPECT_EQ(det_fraction_free(m), reference);
    EXPECT_EQ(det(m), reference);
  }
}

TEST(PolyMatrix, FractionFreeHandlesZeroPivots) {
  // Leading entry zero forces a row swap.
  PolyMatrix m(3, 3);
  m.at(0, 1) = P("1");
  m.at(1, 0) = P("01");
  m.at(2, 2) = P("11");
  EXPECT_EQ(det_fraction_free(m), testing::laplace_det(m));
  EXPECT_EQ(det_fraction_free(PolyMatrix(5, 5)), Poly2::zero());
}

TEST(PolyMatrix, AdjugateExamples) {
  EXPECT_EQ(adjugate(PolyMatrix::identity(2)), PolyMatrix::identity(2));
  PolyMatrix one(1, 1);
  one.at(0, 0) = P("0111");
  EXPECT_EQ(adjugate(one), PolyMatrix::identity(1));
}

TEST(PolyMatrix, AdjugateDefiningIdentity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_poly_matrix(rng, 3, 3, 3);
    const auto expect = det(m) * PolyMatrix::identity(3);
    EXPECT_EQ(m * adjugate(m), expect);
    EXPECT_EQ(adjugate(m) * m, expect);
  }
}

TEST(PolyMatrix, ShapeChecks) {
  EXPECT_THROW(PolyMatrix(0, 1), ShapeError);
  EXPECT_THROW(PolyMatrix(2, 3) * PolyMatrix(2, 3), ShapeError);
  EXPECT_THROW(PolyMatrix(2, 3) + PolyMatrix(3, 2), ShapeError);
}

}  // namespace
}  // namespace lft

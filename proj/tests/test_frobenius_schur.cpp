#include <gtest/gtest.h>

#include "zmoments/frobenius_schur.hpp"

using namespace zmoments;

TEST(FrobeniusSchur, GFactorSequence) {
  const char* expected[] = {"1", "1", "2", "42", "24024", "701149020", "1671643033734960"};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(g_factor(k), Integer(expected[k])) << k;
  // g_k counts standard tableaux of the k x k square
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(g_factor(k), dim_hook(Partition(std::vector<int>(k, k))));
}

TEST(FrobeniusSchur, SuperPowerSums) {
  SuperPoint pt = super_point(Partition{3, 1});  // (2 | 1): x = 5/2, y = 3/2
  ASSERT_EQ(pt.x.size(), 1u);
  EXPECT_EQ(pt.x[0], Rational(5, 2));
  EXPECT_EQ(pt.y[0], Rational(3, 2));
  EXPECT_EQ(super_power_sum(1, pt), 4);                    // = |nu|
  EXPECT_EQ(super_power_sum(2, pt), ratio(25 - 9, 4));  // x^2 - y^2
  // p_1 of any super point is the weight
  for (int n = 0; n <= 8; ++n)
    for (const auto& nu : partitions_of(n)) EXPECT_EQ(super_power_sum(1, super_point(nu)), n);
}

TEST(FrobeniusSchur, HalfIntegerPowerSums) {
  for (int r = 0; r <= 6; ++r) {
    RatPoly P = half_integer_power_sum(r);
    EXPECT_LE(P.degree(), r + 1);
    for (int k = 0; k <= 7; ++k) {
      Rational s = 0;
      for (int i = 0; i < k; ++i) {
        Rational t = 1, b(2 * i + 1, 2);
        for (int j = 0; j < r; ++j) t *= b;
        s += t;
      }
      EXPECT_EQ(P(Rational(k)), s) << "r=" << r << " k=" << k;
    }
  }
  // the square point has p_r = this sum on both alphabets
  for (int r = 1; r <= 5; ++r) {
    RatPoly sq = super_power_sum(r, square_point());
    RatPoly h = half_integer_power_sum(r);
    EXPECT_EQ(sq, r % 2 ? h + h : RatPoly());
  }
}

TEST(FrobeniusSchur, DimensionThreeWays) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& nu : partitions_of(n))
      for (int m = 0; m <= std::min(n, 4); ++m)
        for (const auto& mu : partitions_of(m)) {
          Integer a = dim_fs(mu, nu);
          EXPECT_EQ(a, dim_paths(mu, nu)) << mu.to_string() << " in " << nu.to_string();
          EXPECT_EQ(a, dim_skew_det(mu, nu)) << mu.to_string() << " in " << nu.to_string();
        }
}

TEST(FrobeniusSchur, ComplementDimensionPolynomial) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (const auto& kap : partitions_of(a))
        for (const auto& lam : partitions_of(b)) {
          ComplementPoly P = dim_complement_poly(kap, lam);
          EXPECT_EQ(P.depth, a + b);
          EXPECT_LE(P.B.degree(), 2 * (a + b));
          EXPECT_EQ(P.B, complement_poly_symbolic(kap, lam));
          for (int k = 2; k <= 6; ++k) {
            // outside the range where the shape fits the formula does not apply
            if (kap.length() > k || kap.largest() > k || k * k < a + b) continue;
            EXPECT_EQ(P(k), Rational(dim_complement(kap, lam, k)))
                << kap.to_string() << " " << lam.to_string() << " k=" << k;
          }
        }
}

TEST(FrobeniusSchur, ComplementByDirectCount) {
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a <= std::min(4, k * k); ++a)
      for (const auto& kap : partitions_of(a)) {
        auto c = complement(kap, k, k);
        for (int b = 0; a + b <= 4; ++b)
          for (const auto& lam : partitions_of(b)) {
            Integer want = c ? dim_paths(lam, *c) : Integer(0);
            EXPECT_EQ(dim_complement(kap, lam, k), want);
          }
      }
}

// dim(lambda, kappa-complement) = dim(kappa, lambda-complement): both count
// fillings of the square with a corner removed at either end.
TEST(FrobeniusSchur, ComplementSymmetry) {
  for (int k = 1; k <= 5; ++k)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        for (const auto& kap : partitions_of(a))
          for (const auto& lam : partitions_of(b))
            EXPECT_EQ(dim_complement(kap, lam, k), dim_complement(lam, kap, k))
                << kap.to_string() << lam.to_string() << k;
}

TEST(FrobeniusSchur, SquareLatticeSymmetry) {
  for (int k = 1; k <= 5; ++k) {
    Partition square(std::vector<int>(k, k));
    for (int w = 0; w <= k * k; ++w)
      for (const auto& lam : partitions_of(w)) {
        auto c = complement(lam, k, k);
        if (!c) continue;
        EXPECT_EQ(dim_paths(Partition{}, *c), dim_paths(lam, square)) << lam.to_string() << " k=" << k;
      }
  }
}

TEST(FrobeniusSchur, HookShiftCoefficients) {
  EXPECT_EQ(hook_shift_coeff(3, 3), 1);
  EXPECT_EQ(hook_shift_coeff(1, 0), Rational(-1, 2));
  EXPECT_EQ(hook_shift_coeff(2, 0), Rational(3, 4));  // e_2(1/2, 3/2)
}

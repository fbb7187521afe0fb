#include <gtest/gtest.h>

#include <random>

#include "zmoments/scalar.hpp"
#include "zmoments/symseries.hpp"

using namespace zmoments;

namespace {

PairSeries random_series(int W, unsigned seed, bool constant_one) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 6);
  PairSeries s(Basis::Power, W);
  if (constant_one) s.set({Partition{}, Partition{}}, Rational(1));
  for (int w = 1; w <= W; ++w)
    for (int a = 0; a <= w; ++a)
      for (const auto& m : partitions_of(a))
        for (const auto& v : partitions_of(w - a)) s.add({m, v}, ratio(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST(Scalar, PromotionRules) {
  Scalar q = Rational(1, 2);
  Scalar p = RatPoly(std::vector<Rational>{0, 1});  // k
  Scalar x = BigReal(3, Prec::digits(30));
  EXPECT_TRUE((q * p).is_poly());
  EXPECT_EQ((q * p).poly()(Rational(4)), 2);
  EXPECT_TRUE((q + x).is_real());
  EXPECT_EQ((q + x).real(), BigReal(Rational(7, 2), Prec::digits(30)));
  EXPECT_THROW(p * x, std::domain_error);
  EXPECT_TRUE((q - q).is_zero());
}

TEST(PairSeries, TruncatesAndDropsZeros) {
  PairSeries s(Basis::Power, 2);
  s.add({Partition{1}, Partition{1}}, Rational(1));
  s.add({Partition{2}, Partition{1}}, Rational(1));  // weight 3: dropped
  s.add({Partition{1}, Partition{}}, Rational(0));
  EXPECT_EQ(s.size(), 1u);
  PairSeries t = s * s;  // weight 4: gone
  EXPECT_EQ(t.size(), 0u);
}

TEST(PairSeries, PowerProductConcatenatesParts) {
  PairSeries a(Basis::Power, 6), b(Basis::Power, 6);
  a.set({Partition{2}, Partition{1}}, Rational(3));
  b.set({Partition{1}, Partition{1}}, Rational(2));
  PairSeries c = a * b;
  EXPECT_EQ(c.coeff(Partition{2, 1}, Partition{1, 1}), Scalar(Rational(6)));
}

TEST(PairSeries, ExpAndLogAreInverse) {
  for (unsigned seed = 1; seed <= 3; ++seed) {
    PairSeries f = random_series(5, seed, true);
    PairSeries back = series_exp(series_log(f));
    for (const auto& [key, v] : f.coeffs()) EXPECT_EQ(back.coeff(key), v) << key.first.to_string() << key.second.to_string();
    EXPECT_EQ(back.size(), f.size());
  }
}

TEST(PairSeries, LogOfProductIsSum) {
  PairSeries f = random_series(4, 7, true), g = random_series(4, 8, true);
  PairSeries lhs = series_log(f * g);
  PairSeries rhs = series_log(f) + series_log(g);
  for (const auto& [key, v] : rhs.coeffs()) EXPECT_EQ(lhs.coeff(key), v);
  EXPECT_EQ(lhs.size(), rhs.size());
}

TEST(PairSeries, ExpOfSinglePowerSum) {
  // exp(p_1(A) p_1(B)) = sum_n p_1^n p_1^n / n!
  PairSeries a(Basis::Power, 8);
  a.set({Partition{1}, Partition{1}}, Rational(1));
  PairSeries e = series_exp(a);
  for (int n = 0; n <= 4; ++n) {
    Partition ones(std::vector<int>(n, 1));
    EXPECT_EQ(e.coeff(ones, ones), Scalar(ratio(1, factorial(n))));
  }
}

TEST(PairSeries, SchurPowerTransitionsInvert) {
  PairSeries f = random_series(5, 11, false);
  PairSeries g = schur_to_p(p_to_schur(f));
  for (const auto& [key, v] : f.coeffs()) EXPECT_EQ(g.coeff(key), v);
  EXPECT_EQ(g.size(), f.size());
  EXPECT_EQ(p_to_schur(f).basis(), Basis::Schur);
}

TEST(SymmetricFunctions, MonomialEvaluation) {
  // m_mu at the parts of kappa
  EXPECT_EQ(monomial_eval(Partition{}, Partition{3, 1}), 1);
  EXPECT_EQ(monomial_eval(Partition{1}, Partition{3, 1}), 4);
  EXPECT_EQ(monomial_eval(Partition{2}, Partition{3, 1}), 10);
  EXPECT_EQ(monomial_eval(Partition{1, 1}, Partition{3, 1}), 3);
  EXPECT_EQ(monomial_eval(Partition{1, 1}, Partition{2, 2, 1}), 8);  // 4 + 2 + 2
  EXPECT_EQ(monomial_eval(Partition{2, 1}, Partition{2, 1}), 4 * 1 + 1 * 2);
  EXPECT_EQ(monomial_eval(Partition{1, 1, 1}, Partition{2, 1}), 0);
  EXPECT_EQ(multinomial(4, Partition{2, 1, 1}), 12);
  EXPECT_EQ(multinomial(0, Partition{}), 1);
}

TEST(SymmetricFunctions, SchurAtPointsMatchesElementary) {
  const Prec P = Prec::digits(40);
  std::vector<BigReal> x{BigReal(Rational(1, 3), P), BigReal(Rational(-7, 5), P), BigReal(Rational(2, 7), P)};
  BigReal e1 = x[0] + x[1] + x[2];
  BigReal e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
  BigReal e3 = x[0] * x[1] * x[2];
  auto close = [&](const BigReal& a, const BigReal& b) { return abs(a - b) < ten_pow(-35, P); };
  EXPECT_TRUE(close(schur_eval(Partition{1}, x), e1));
  EXPECT_TRUE(close(schur_eval(Partition{1, 1}, x), e2));
  EXPECT_TRUE(close(schur_eval(Partition{1, 1, 1}, x), e3));
  EXPECT_TRUE(close(schur_eval(Partition{2}, x), e1 * e1 - e2));          // h_2
  EXPECT_TRUE(close(schur_eval(Partition{2, 1}, x), e1 * e2 - e3));       // s_21
  EXPECT_TRUE(schur_eval(Partition{1, 1, 1, 1}, x).is_zero());
  std::vector<BigReal> dup{x[0], x[0]};
  EXPECT_THROW(schur_eval(Partition{1}, dup), std::domain_error);
}

TEST(SymmetricFunctions, DeterminantByElimination) {
  const Prec P = Prec::digits(30);
  std::vector<std::vector<BigReal>> m{{BigReal(0, P), BigReal(2, P)}, {BigReal(3, P), BigReal(5, P)}};
  EXPECT_EQ(determinant(m), BigReal(-6, P));
}

// Laplace-type identity for splitting an alphabet of 2k letters into halves.
TEST(BumpGamburd, ResidualsVanishOnRandomAlphabets) {
  const Prec P = Prec::digits(40);
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> xs;
      while (static_cast<int>(xs.size()) < 2 * k) {
        double v = U(rng);
        bool ok = true;
        for (double y : xs) ok = ok && std::abs(v - y) >= 0.05;
        if (ok) xs.push_back(v);
      }
      std::vector<BigReal> pts;
      for (double v : xs) pts.push_back(BigReal::from_double(v, P));
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 4; ++b)
          for (const auto& kap : partitions_of(a))
            for (const auto& lam : partitions_of(b))
              EXPECT_LT(bump_gamburd_residual(kap, lam, pts), ten_pow(-30, P))
                  << "k=" << k << " " << kap.to_string() << lam.to_string();
    }
}

TEST(BumpGamburd, SingleLetterCase) {
  // s_(1)(a)/(a-b) + s_(1)(b)/(b-a) = 1
  const Prec P = Prec::digits(30);
  std::vector<BigReal> pts{BigReal(Rational(3, 10), P), BigReal(Rational(-9, 7), P)};
  EXPECT_LT(bump_gamburd_residual(Partition{1}, Partition{}, pts), ten_pow(-25, P));
  EXPECT_THROW(bump_gamburd_residual(Partition{}, Partition{}, {pts[0]}), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "zmoments/zeta.hpp"

using namespace zmoments;

namespace {

bool agree(const BigReal& a, const BigReal& b, int digits) {
  BigReal scale = max_abs(a, b);
  if (scale.is_zero()) return true;
  return abs(a - b) <= scale * ten_pow(-digits, a.prec());
}

BigReal dec(const char* s, int digits) { return BigReal(std::string(s), Prec::digits(digits)); }

}  // namespace

TEST(Zeta, BernoulliNumbers) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(20), Rational(-174611, 330));
}

TEST(Zeta, PrimesAndMobius) {
  auto ps = primes_up_to(100);
  EXPECT_EQ(ps.size(), 25u);
  EXPECT_EQ(ps.back(), 97);
  EXPECT_EQ(primes_up_to(1000000).size(), 78498u);
  auto mu = mobius_up_to(30);
  EXPECT_EQ(mu[1], 1);
  EXPECT_EQ(mu[6], 1);
  EXPECT_EQ(mu[12], 0);
  EXPECT_EQ(mu[30], -1);
}

TEST(Zeta, EvenValues) {
  const int D = 40;
  const Prec P = Prec::digits(D);
  BigReal p2 = pi(P) * pi(P);
  auto z2 = zeta_taylor(BigReal(2, P), 0, D);
  auto z4 = zeta_taylor(BigReal(4, P), 0, D);
  EXPECT_TRUE(agree(z2[0], p2 / 6, D - 2));
  EXPECT_TRUE(agree(z4[0], p2 * p2 / 90, D - 2));
}

TEST(Zeta, DerivativeAtTwo) {
  // zeta'(2) = pi^2/6 (gamma + log 2pi - 12 log A), A the Glaisher constant
  const int D = 32;
  const Prec P = Prec::digits(D);
  BigReal A = dec("1.28242712910062263687534256886979", D);
  BigReal want = pi(P) * pi(P) / 6 * (euler_gamma(P) + log(pi(P) * 2L) - log(A) * 12L);
  EXPECT_TRUE(agree(zeta_derivative(1, BigReal(2, P), D), want, 29)) << zeta_derivative(1, BigReal(2, P), D).to_string(35);
}

TEST(Zeta, TaylorCoefficientsMatchDerivatives) {
  const int D = 40;
  const Prec P = Prec::digits(D);
  BigReal x(Rational(5, 2), P);
  auto t = zeta_taylor(x, 4, D);
  for (int n = 0; n <= 4; ++n) {
    BigReal want = zeta_derivative(n, x, D);
    want *= ratio(1, factorial(n));
    EXPECT_TRUE(agree(t[n], want, D - 3)) << n;
  }
}

TEST(Zeta, StieltjesConstants) {
  const int D = 34;
  EXPECT_TRUE(agree(stieltjes_gamma(0, D), euler_gamma(Prec::digits(D)), 32));
  EXPECT_TRUE(agree(stieltjes_gamma(1, D), dec("-0.0728158454836767248605863758749013191377", D), 32))
      << stieltjes_gamma(1, D).to_string(36);
  EXPECT_TRUE(agree(stieltjes_gamma(2, D), dec("-0.00969036319287231848453038603521", D), 30));
  // the first cumulant of log(s zeta(1+s)) is gamma
  EXPECT_TRUE(agree(stieltjes_cumulant(1, D), euler_gamma(Prec::digits(D)), 32));
}

TEST(PrimeZeta, RegularizedConstantTerm) {
  // sum_p (log(1 - 1/p) + 1/p) + gamma ... written as M - gamma
  auto c = prime_zeta_taylor(1, 2, 30);
  EXPECT_TRUE(agree(c.values[0], dec("-0.315718452", 30), 8)) << c.values[0].to_string(20);
  BigReal mertens = dec("0.2614972128476427837554268386086958590516", 40);
  EXPECT_TRUE(agree(c.values[0], mertens - euler_gamma(Prec::digits(40)), 27));
  EXPECT_THROW(prime_zeta_taylor(1, 2, 30, 100), std::domain_error);
}

TEST(PrimeZeta, KnownValueAtTwo) {
  auto c = prime_zeta_taylor(2, 0, 40);
  EXPECT_TRUE(agree(c.values[0], dec("0.4522474200410654985065433648322479", 40), 33));
}

// Two routes: the Mobius series alone versus an explicit sum over primes up to
// 10^6 plus the Mobius series for the primes beyond. From r = 8 on the second
// piece is below 10^-25 of the total, so it is the direct prime sum.
TEST(PrimeZeta, TwoRoutesAgree) {
  const int D = 30, N = 6;
  const long cut = 1000000;
  for (int r = 2; r <= 10; ++r) {
    auto mob = prime_zeta_taylor(r, N, D, 0);
    auto head = prime_sum_taylor(r, N, D, cut);
    auto tail = prime_zeta_taylor(r, N, D, cut);
    auto mid = prime_zeta_taylor(r, N, D, 1000);
    auto mid_head = prime_sum_taylor(r, N, D, 1000);
    for (int n = 0; n <= N; ++n) {
      EXPECT_TRUE(agree(mob.values[n], head[n] + tail.values[n], 25))
          << "r=" << r << " n=" << n << " " << mob.values[n].to_string(30) << " vs "
          << (head[n] + tail.values[n]).to_string(30);
      EXPECT_TRUE(agree(mob.values[n], mid_head[n] + mid.values[n], 25)) << "r=" << r << " n=" << n;
      if (r >= 8) {
        BigReal scale = max_abs(head[n], mob.values[n]);
        EXPECT_LT(abs(tail.values[n]), scale * ten_pow(-25, scale.prec())) << "r=" << r << " n=" << n;
      }
    }
  }
}

TEST(PrimeZeta, SignPatternOfTaylorCoefficients) {
  // coefficients of sum p^{-(r+s)} alternate in sign
  auto c = prime_zeta_taylor(3, 6, 30);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(c.values[n].sign(), n % 2 ? -1 : 1) << n;
  for (const auto& b : c.tail_bounds) EXPECT_LT(b, ten_pow(-30, b.prec()));
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "zmoments/characters.hpp"
#include "zmoments/partition.hpp"

using namespace zmoments;

TEST(Partition, NormalizesAndValidates) {
  Partition p{3, 1, 0, 0};
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 4);
  EXPECT_EQ(p.to_string(), "(3,1)");
  EXPECT_EQ(Partition{}.to_string(), "()");
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition::from_multiset({1, 3, 0, 2}), (Partition{3, 2, 1}));
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(partition_count(n), p[n]);
    const auto& ps = partitions_of(n);
    EXPECT_EQ(static_cast<long>(ps.size()), p[n]);
    for (size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]) << "reverse lexicographic order";
    for (const auto& q : ps) EXPECT_EQ(q.weight(), n);
  }
  EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
  EXPECT_EQ(partitions_of(4).back(), (Partition{1, 1, 1, 1}));
}

TEST(Partition, ConjugateIsInvolution) {
  EXPECT_EQ((Partition{4, 2, 1}).conjugate(), (Partition{3, 2, 1, 1}));
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().weight(), n);
      EXPECT_EQ(p.conjugate().length(), p.largest());
    }
}

TEST(Partition, CentralizerSumsToOne) {
  // class sizes n!/z sum to n!
  for (int n = 1; n <= 10; ++n) {
    Rational s = 0;
    for (const auto& p : partitions_of(n)) s += ratio(1, p.centralizer());
    EXPECT_EQ(s, 1) << n;
  }
  EXPECT_EQ((Partition{2, 2, 1}).centralizer(), 8);
  EXPECT_EQ((Partition{1, 1, 1}).centralizer(), 6);
}

TEST(Partition, FrobeniusCoordinates) {
  Frobenius f = frobenius(Partition{4, 3, 1});
  EXPECT_EQ(f.arms, (std::vector<int>{3, 1}));
  EXPECT_EQ(f.legs, (std::vector<int>{2, 0}));
  ShiftedFrobenius s = shifted_frobenius(Partition{4, 3, 1});
  EXPECT_EQ(s.x[0], Rational(7, 2));
  EXPECT_EQ(s.y[1], Rational(1, 2));
  // weight = sum (arm + leg + 1)
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) {
      Frobenius g = frobenius(p);
      int w = 0;
      for (size_t i = 0; i < g.arms.size(); ++i) w += g.arms[i] + g.legs[i] + 1;
      EXPECT_EQ(w, n);
    }
}

TEST(Partition, ComplementTilesTheRectangle) {
  for (int K = 1; K <= 4; ++K)
    for (int L = 1; L <= 4; ++L)
      for (int n = 0; n <= K * L; ++n)
        for (const auto& p : partitions_of(n)) {
          auto c = complement(p, K, L);
          if (p.length() > K || p.largest() > L) {
            EXPECT_FALSE(c.has_value());
            continue;
          }
          ASSERT_TRUE(c.has_value());
          EXPECT_EQ(p.weight() + c->weight(), K * L);
          // row i of p plus row K+1-i of c^t fills the row
          Partition ct = c->conjugate();
          for (int i = 1; i <= K; ++i) EXPECT_EQ(p.part(i) + ct.part(K + 1 - i), L);
          EXPECT_EQ(*complement(*c, L, K), p);
        }
  EXPECT_EQ(*complement(Partition{}, 3, 3), (Partition{3, 3, 3}));
}

TEST(Partition, SortMergeSignsAndCollisions) {
  // entries kappa_i + K - i and lambda_i + L - i
  EXPECT_TRUE(sort_merge(Partition{}, Partition{}, 2, 2).zero);  // (1,0) twice
  SortMerge a = sort_merge(Partition{1}, Partition{}, 1, 1);     // (1),(0): sorted
  EXPECT_FALSE(a.zero);
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.mu, (Partition{}));
  SortMerge b = sort_merge(Partition{}, Partition{1}, 1, 1);  // (0),(1): one swap
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.mu, (Partition{}));
  SortMerge c = sort_merge(Partition{}, Partition{2}, 1, 1);  // (2,0) - rho = (1)
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.mu, (Partition{1}));
  SortMerge d = sort_merge(Partition{2}, Partition{1}, 1, 1);  // (2,1) - rho = (1,1)
  EXPECT_EQ(d.sign, 1);
  EXPECT_EQ(d.mu, (Partition{1, 1}));
  // (k^k) against the empty partition gives back the empty shape: the leading term
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> sq(k, k);
    SortMerge e = sort_merge(Partition(sq), Partition{}, k, k);
    EXPECT_FALSE(e.zero);
    EXPECT_EQ(e.mu, (Partition{}));
  }
  EXPECT_THROW(sort_merge(Partition{1, 1}, Partition{}, 1, 1), std::invalid_argument);
}

TEST(Partition, ComplementaryPairsMergeToTheEmptyShape) {
  // kappa the complement of lambda in the square: mu is empty, sign (-1)^|lambda|
  for (int k = 1; k <= 4; ++k)
    for (int w = 0; w <= k * k; ++w)
      for (const auto& lam : partitions_of(w)) {
        auto kap = complement(lam, k, k);
        if (!kap) continue;
        SortMerge m = sort_merge(*kap, lam, k, k);
        EXPECT_FALSE(m.zero);
        EXPECT_TRUE(m.mu.empty());
        EXPECT_EQ(m.sign, w % 2 ? -1 : 1) << lam.to_string() << " k=" << k;
      }
}

TEST(Dimension, HookFormulaKnownValues) {
  EXPECT_EQ(dim_hook(Partition{}), 1);
  EXPECT_EQ(dim_hook(Partition{2, 1}), 2);
  EXPECT_EQ(dim_hook(Partition{3, 3, 3}), 42);
  EXPECT_EQ(dim_hook(Partition{4, 4, 4, 4}), 24024);
  // sum of squares = n!
  for (int n = 0; n <= 10; ++n) {
    Integer s = 0;
    for (const auto& p : partitions_of(n)) s += dim_hook(p) * dim_hook(p);
    EXPECT_EQ(s, factorial(n));
  }
}

TEST(Dimension, PathsDeterminantAndHookAgree) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& nu : partitions_of(n)) {
      EXPECT_EQ(dim_paths(Partition{}, nu), dim_hook(nu));
      for (int m = 0; m <= std::min(n, 4); ++m)
        for (const auto& mu : partitions_of(m)) {
          Integer a = dim_paths(mu, nu);
          EXPECT_EQ(a, dim_skew_det(mu, nu)) << mu.to_string() << nu.to_string();
          if (!nu.contains(mu)) EXPECT_EQ(a, 0);
        }
    }
}

// Pieri: s_kappa p_1^r = sum_mu dim(kappa, mu) s_mu, checked through the
// power-sum basis and the character transition.
TEST(Dimension, PieriExpansion) {
  for (int a = 0; a <= 4; ++a)
    for (const auto& kap : partitions_of(a))
      for (int r = 0; r <= 4; ++r) {
        std::map<Partition, Rational> power;
        for (const auto& [rho, c] : schur_to_power(kap)) {
          std::vector<int> parts = rho.parts();
          parts.insert(parts.end(), r, 1);
          power[Partition::from_multiset(parts)] += c;
        }
        auto schur = power_to_schur(power);
        for (const auto& mu : partitions_of(a + r)) {
          Rational got = schur.count(mu) ? schur[mu] : Rational(0);
          EXPECT_EQ(got, Rational(dim_paths(kap, mu))) << kap.to_string() << " r=" << r << " " << mu.to_string();
        }
      }
}

TEST(Dimension, ContainmentAndJoin) {
  EXPECT_TRUE((Partition{3, 2}).contains(Partition{2, 2}));
  EXPECT_FALSE((Partition{3, 2}).contains(Partition{1, 1, 1}));
  EXPECT_EQ(join(Partition{3, 1}, Partition{2, 1}), (Partition{3, 2, 1, 1}));
  auto m = (Partition{3, 1, 1}).multiplicities();
  EXPECT_EQ(m[1], 2);
  EXPECT_EQ(m[3], 1);
}

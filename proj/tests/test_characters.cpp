#include <gtest/gtest.h>

#include <thread>

#include "zmoments/characters.hpp"

using namespace zmoments;

TEST(Characters, S3Table) {
  const auto& t = character_table(3);
  // classes (3), (2,1), (1,1,1)
  EXPECT_EQ(t(Partition{3}, Partition{2, 1}), 1);
  EXPECT_EQ(t(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(t(Partition{2, 1}, Partition{2, 1}), 0);
  EXPECT_EQ(t(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(t(Partition{1, 1, 1}, Partition{2, 1}), -1);
}

TEST(Characters, RowOrthogonality) {
  for (int n = 0; n <= 8; ++n) {
    const auto& t = character_table(n);
    const auto& ps = t.partitions();
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b) {
        Rational s = 0;
        for (size_t c = 0; c < ps.size(); ++c) s += ratio(t.at(a, c) * t.at(b, c), ps[c].centralizer());
        EXPECT_EQ(s, a == b ? 1 : 0) << "n=" << n;
      }
  }
}

TEST(Characters, ColumnOrthogonality) {
  for (int n = 0; n <= 8; ++n) {
    const auto& t = character_table(n);
    const auto& ps = t.partitions();
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b) {
        Integer s = 0;
        for (size_t l = 0; l < ps.size(); ++l) s += Integer(static_cast<long>(t.at(l, a) * t.at(l, b)));
        EXPECT_EQ(s, a == b ? ps[a].centralizer() : Integer(0)) << "n=" << n;
      }
  }
}

TEST(Characters, IdentityClassGivesHookDimension) {
  for (int n = 0; n <= 10; ++n) {
    const auto& t = character_table(n);
    Partition ones(std::vector<int>(n, 1));
    for (const auto& lam : t.partitions()) EXPECT_EQ(Integer(static_cast<long>(t(lam, ones))), dim_hook(lam));
  }
}

TEST(Characters, TableMatchesDirectRule) {
  for (int n = 0; n <= 7; ++n) {
    const auto& t = character_table(n);
    for (const auto& lam : t.partitions())
      for (const auto& mu : t.partitions()) EXPECT_EQ(t(lam, mu), mn_character(lam, mu));
  }
}

TEST(Characters, SignAndConjugation) {
  // chi^{lambda^t}(mu) = sgn(mu) chi^lambda(mu)
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    for (const auto& lam : t.partitions())
      for (const auto& mu : t.partitions()) {
        int sgn = (n - mu.length()) % 2 ? -1 : 1;
        EXPECT_EQ(t(lam.conjugate(), mu), sgn * t(lam, mu));
      }
  }
}

TEST(Characters, PowerSchurRoundTrip) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto s = power_to_schur(schur_to_power(lam));
      for (const auto& [mu, c] : s) EXPECT_EQ(c, mu == lam ? 1 : 0);
      EXPECT_EQ(s.count(lam), 1u);
    }
  // p_1^3 = s_3 + 2 s_21 + s_111
  auto s = power_to_schur({{Partition{1, 1, 1}, Rational(1)}});
  EXPECT_EQ(s[Partition{3}], 1);
  EXPECT_EQ(s[(Partition{2, 1})], 2);
  EXPECT_EQ(s[(Partition{1, 1, 1})], 1);
}

TEST(Characters, ConcurrentAccessIsConsistent) {
  std::vector<std::thread> pool;
  std::vector<std::int64_t> got(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&, i] { got[i] = character_table(9)(Partition{5, 3, 1}, Partition{3, 3, 2, 1}); });
  for (auto& th : pool) th.join();
  for (auto v : got) EXPECT_EQ(v, mn_character(Partition{5, 3, 1}, Partition{3, 3, 2, 1}));
}

TEST(Characters, StoredValuesAreShapeChecked) {
  EXPECT_THROW(CharacterTable(3, {{1, 1}, {1, 1}}), std::invalid_argument);
  CharacterTable t(3, character_table(3).values());
  EXPECT_EQ(t.values(), character_table(3).values());
}

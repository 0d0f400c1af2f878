#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pogame/poset.hpp"

using namespace pogame;

namespace {

// Oracle: largest antichain by subset enumeration.
int brute_width(const Poset& p) {
  const int n = int(p.size());
  int best = n ? 1 : 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int cnt = __builtin_popcount(mask);
    if (cnt <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && p.comparable(i, j)) ok = false;
    if (ok) best = cnt;
  }
  return best;
}

// Oracle: induced embedding by trying every injective map.
bool brute_contains(const Poset& host, const Poset& pat) {
  const int n = int(host.size()), k = int(pat.size());
  std::vector<int> map;
  std::vector<char> used(std::size_t(n), 0);
  auto rec = [&](auto&& self) -> bool {
    const int i = int(map.size());
    if (i == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[std::size_t(h)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int g = map[std::size_t(j)];
        ok = pat.less(j, i) == host.less(g, h) && pat.less(i, j) == host.less(h, g);
      }
      if (!ok) continue;
      used[std::size_t(h)] = 1;
      map.push_back(h);
      if (self(self)) return true;
      map.pop_back();
      used[std::size_t(h)] = 0;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace

TEST(Poset, ClosureAddsTransitivePairs) {
  Poset p = validate_poset({{0, 1}, {1, 2}}, 3);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.less(2, 0));
  EXPECT_EQ(p.comparable_pair_count(), 3u);
}

TEST(Poset, RejectsCyclesAndReflexivePairs) {
  EXPECT_THROW(validate_poset({{0, 1}, {1, 0}}, 2), PosetError);
  EXPECT_THROW(validate_poset({{0, 1}, {1, 2}, {2, 0}}, 3), PosetError);
  EXPECT_THROW(validate_poset({{1, 1}}, 2), PosetError);
  EXPECT_THROW(validate_poset({{0, 5}}, 2), PosetError);
}

TEST(Poset, FromClosedRelationChecksTransitivity) {
  EXPECT_THROW(Poset::from_closed_relation(3, [](int x, int y) { return y == x + 1; }), PosetError);
  EXPECT_NO_THROW(Poset::from_closed_relation(3, [](int x, int y) { return x < y; }));
}

TEST(Poset, ChainAndAntichain) {
  EXPECT_EQ(width(chain_poset(7)), 1);
  EXPECT_EQ(width(antichain_poset(7)), 7);
  EXPECT_EQ(width(antichain_poset(0)), 0);
  EXPECT_TRUE(incomparables(chain_poset(4), 2).empty());
  EXPECT_EQ(incomparables(antichain_poset(4), 2).size(), 3u);
}

TEST(Poset, WidthMatchesAntichainEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::mt19937_64 rng(seed);
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Poset p = random_poset(n, std::uniform_real_distribution<double>(0.05, 0.7)(rng), seed);
    ASSERT_EQ(width(p), brute_width(p)) << "seed " << seed;
  }
}

TEST(Poset, WitnessAndPartitionCertifyEachOther) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Poset p = random_poset(5 + int(seed % 30), 0.15 + 0.005 * double(seed), seed);
    auto wr = width_with_witness(p);
    ASSERT_EQ(int(wr.antichain.size()), wr.width);
    for (std::size_t i = 0; i < wr.antichain.size(); ++i)
      for (std::size_t j = i + 1; j < wr.antichain.size(); ++j)
        ASSERT_TRUE(p.incomparable(wr.antichain[i], wr.antichain[j]));
    auto part = min_chain_partition(p);
    ASSERT_EQ(int(part.size()), wr.width);
    std::vector<int> seen(p.size(), 0);
    for (const auto& c : part.chains) {
      for (std::size_t i = 0; i + 1 < c.size(); ++i) ASSERT_TRUE(p.less(c[i], c[i + 1]));
      for (int x : c) ++seen[std::size_t(x)];
    }
    for (int s : seen) ASSERT_EQ(s, 1);
  }
}

TEST(Poset, CoverPairsRegenerateTheOrder) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Poset p = random_poset(15, 0.3, seed);
    auto cover = p.cover_pairs();
    Poset q = validate_poset(cover, p.size());
    EXPECT_EQ(p, q);
    for (auto [x, y] : cover)
      for (int z = 0; z < int(p.size()); ++z) EXPECT_FALSE(p.less(x, z) && p.less(z, y));
  }
}

TEST(Poset, HashFollowsTheRelation) {
  EXPECT_EQ(random_poset(10, 0.3, 4).hash(), random_poset(10, 0.3, 4).hash());
  EXPECT_NE(chain_poset(5).hash(), antichain_poset(5).hash());
}

TEST(Poset, IncomparabilityIntervalOnAChain) {
  Poset p = poset_from_side_chains(5, {{{1, 1, 3}}});
  std::vector<int> base{0, 1, 2, 3, 4};
  auto iv = incomparability_interval(p, base, 5);
  EXPECT_EQ(iv.lo, 1);
  EXPECT_EQ(iv.hi, 3);
  EXPECT_EQ(iv.size(), 3);
  EXPECT_TRUE(p.less(0, 5));
  EXPECT_TRUE(p.less(5, 4));
}

TEST(Poset, EmptyIntervalKeepsItsGap) {
  Poset p = poset_from_side_chains(4, {{{1, 2, 1}}});
  auto iv = incomparability_interval(p, {0, 1, 2, 3}, 4);
  EXPECT_TRUE(iv.empty());
  EXPECT_EQ(iv.lo, 2);
  EXPECT_TRUE(p.less(1, 4));
  EXPECT_TRUE(p.less(4, 2));
}

TEST(Poset, EmptyIntervalsInOneGapOnDifferentChainsAreIncomparable) {
  Poset p = poset_from_side_chains(3, {{{1, 1, 0}}, {{2, 1, 0}}});
  EXPECT_TRUE(p.incomparable(3, 4));
  EXPECT_EQ(width(p), 2);
}

TEST(Poset, NonConsecutiveIncomparablesAreReported) {
  Poset p = validate_poset({{0, 2}}, 4);
  EXPECT_THROW(incomparability_interval(p, {1, 2, 3}, 0), ContiguityViolation);
}

TEST(Poset, SideChainsMustBeMonotone) {
  EXPECT_THROW(poset_from_side_chains(4, {{{1, 2, 3}, {1, 1, 3}}}), PosetError);
  EXPECT_THROW(poset_from_side_chains(4, {{{1, 0, 4}}}), PosetError);
}

TEST(Poset, SideChainsAreChainsAndDisjointIntervalsCompare) {
  Poset p = poset_from_side_chains(6, {{{1, 0, 1}, {1, 2, 4}}, {{2, 3, 5}}});
  // ids: base 0..5, chain1: 6,7, chain2: 8
  EXPECT_TRUE(p.less(6, 7));
  EXPECT_TRUE(p.less(6, 8));    // [0,1] before [3,5]
  EXPECT_TRUE(p.incomparable(7, 8));  // [2,4] meets [3,5]
}

TEST(Poset, InducedSearchAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    Poset host = random_poset(std::uniform_int_distribution<int>(3, 9)(rng), 0.35, seed);
    Poset pat = random_poset(std::uniform_int_distribution<int>(1, 4)(rng), 0.4, seed + 1000);
    bool fast = contains_induced(host, pat);
    ASSERT_EQ(fast, brute_contains(host, pat)) << "seed " << seed;
    if (fast) {
      auto emb = *find_induced(host, pat);
      for (int i = 0; i < int(pat.size()); ++i)
        for (int j = 0; j < int(pat.size()); ++j)
          ASSERT_EQ(pat.less(i, j), host.less(emb[std::size_t(i)], emb[std::size_t(j)]));
    }
  }
}

TEST(Poset, RandomWidthPosetHasRequestedWidth) {
  for (int w = 1; w <= 5; ++w)
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(width(random_width_poset(w, 4 * w + 3, seed)), w);
}

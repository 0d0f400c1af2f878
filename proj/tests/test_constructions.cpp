#include <gtest/gtest.h>

#include "pogame/constructions.hpp"

using namespace pogame;

namespace {

void expect_roles_match_order(const Construction& c) {
  const auto& base = c.meta.chains[0];
  for (std::size_t id = 0; id < c.meta.roles.size(); ++id) {
    const auto& r = c.meta.roles[id];
    if (r.kind != RoleKind::side) continue;
    auto iv = incomparability_interval(c.poset, base, int(id));
    ASSERT_EQ(iv.lo, r.interval.lo) << c.poset.labels()[id];
    ASSERT_EQ(iv.hi, r.interval.hi) << c.poset.labels()[id];
  }
}

}  // namespace

TEST(Constructions, BoundaryIntervalsAreMonotone) {
  auto b = boundary_intervals(4);
  ASSERT_EQ(b.size(), 7u);
  for (std::size_t i = 1; i < b.size(); ++i) {
    EXPECT_LE(b[i - 1].lo, b[i].lo);
    EXPECT_LE(b[i - 1].hi, b[i].hi);
  }
  for (const auto& iv : b) EXPECT_TRUE(iv.lo == 0 || iv.hi == 3);
}

TEST(Constructions, Lemma2Shape) {
  for (int k = 1; k <= 3; ++k) {
    const int m = lemma2_default_length(k);
    Construction c = lemma2_poset(k, m);
    EXPECT_EQ(m, 1 << (k + 2));
    EXPECT_EQ(int(c.poset.size()), m + 2 * k * (2 * m - 1));
    EXPECT_EQ(width(c.poset), 2);
    for (const auto& iv : boundary_intervals(m)) EXPECT_EQ(int(c.meta.duplicates(1, iv).size()), 2 * k);
    expect_roles_match_order(c);
  }
}

TEST(Constructions, Lemma2Labels) {
  Construction c = lemma2_poset(1, 4);
  EXPECT_EQ(c.poset.labels()[0], "C[0]");
  EXPECT_EQ(c.poset.labels()[4], "C1[0]{0,0}");
}

TEST(Constructions, Lemma4DefaultSizing) {
  auto s = lemma4_default_sizing(2, 3);
  EXPECT_EQ(s.sizes, (std::vector<int>{36, 6}));
  EXPECT_EQ(s.m, 216);
  Construction c = lemma4_poset(2, 3, 3);
  EXPECT_EQ(c.poset.size(), 216u + 9u * (181u + 211u));
  EXPECT_EQ(width(c.poset), 3);
  EXPECT_EQ(c.meta.chains.size(), 3u);
  EXPECT_EQ(c.meta.duplicates(2, {0, 10, 15}).size(), 9u);
}

TEST(Constructions, Lemma4SmallInstanceRolesMatch) {
  Construction c = lemma4_poset(2, 3, 1, {6, 2}, 12);
  expect_roles_match_order(c);
  EXPECT_EQ(width(c.poset), 3);
  EXPECT_THROW(lemma4_poset(2, 3, 1, {2, 6}, 12), std::invalid_argument);
  EXPECT_THROW(lemma4_poset(1, 3, 1, {6, 2}, 12), std::invalid_argument);
}

TEST(Constructions, StackedCopiesAreOrderedBlocks) {
  Poset q = antichain_poset(3);
  Construction c = stack_copies(q, 4);
  ASSERT_EQ(c.poset.size(), 12u);
  EXPECT_EQ(width(c.poset), 3);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) {
      if (x / 3 < y / 3) {
        EXPECT_TRUE(c.poset.less(x, y));
      } else if (x / 3 == y / 3 && x != y) {
        EXPECT_TRUE(c.poset.incomparable(x, y));
      }
    }
  EXPECT_EQ(c.meta.global_id(2, 1), 7);
  EXPECT_EQ(c.meta.roles[7].copy, 2);
  EXPECT_EQ(c.meta.roles[7].local, 1);
}

TEST(Constructions, StackKeepsInnerMetadata) {
  Construction c = stack_copies(lemma2_poset(1, 4), 2);
  ASSERT_TRUE(c.meta.inner);
  EXPECT_EQ(c.meta.inner->kind, "lemma2");
  EXPECT_EQ(c.meta.copy_size, int(c.meta.inner_poset->size()));
}

TEST(Constructions, FenceRelation) {
  Poset r = fence_R();
  ASSERT_EQ(r.size(), 10u);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) EXPECT_EQ(r.less(i, j), i + 1 < j);
  EXPECT_EQ(r.labels()[0], "r1");
  EXPECT_EQ(width(r), 2);
}

TEST(Constructions, TwoChainSpecsCoverEveryWidth2Poset) {
  auto corpus = width2_corpus(6);
  for (const auto& c : corpus) ASSERT_EQ(width(c.poset), 2);
  // Any width-2 poset must be isomorphic to a corpus member of its size.
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 40 && seed < 2000; ++seed) {
    Poset p = random_poset(3 + int(seed % 4), 0.45, seed);
    if (width(p) != 2) continue;
    ++checked;
    bool found = false;
    for (const auto& c : corpus)
      if (c.poset.size() == p.size() && c.poset.comparable_pair_count() == p.comparable_pair_count() &&
          contains_induced(c.poset, p)) {
        found = true;
        break;
      }
    EXPECT_TRUE(found) << "seed " << seed;
  }
  EXPECT_EQ(checked, 40);
}

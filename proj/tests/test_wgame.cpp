#include <gtest/gtest.h>

#include "pogame/wgame.hpp"

using namespace pogame;

namespace {

ChainInterval iv(int lo, int hi) { return {0, lo, hi}; }

// Oracle: longest strictly nested sequence by trying every subset ordering
// through plain recursion.
int brute_depth(const std::vector<ChainInterval>& fam) {
  auto inside = [](const ChainInterval& a, const ChainInterval& b) { return b.lo < a.lo && a.hi < b.hi; };
  int best = 0;
  auto rec = [&](auto&& self, int last, int len) -> void {
    best = std::max(best, len);
    for (int i = 0; i < int(fam.size()); ++i)
      if (last < 0 || inside(fam[std::size_t(last)], fam[std::size_t(i)])) self(self, i, len + 1);
  };
  rec(rec, -1, 0);
  return best;
}

// Exhaustive over Painter replies with palette {1}: a reply to a
// presentation may only use colors still available inside the interval.
bool any_painter_survives_one_color(int m, const std::vector<PresenterAction>& script) {
  WGameState s(m, 1);
  for (const auto& act : script) {
    if (act.kind == PresenterAction::Kind::present) {
      s.present(act.interval, act.color);
      bool any_reply = false;
      for (int x = act.interval.lo; x <= act.interval.hi; ++x)
        if (s.uncolored(x) && s.available(x, 1)) any_reply = true;
      if (any_reply) return true;
    } else if (act.kind == PresenterAction::Kind::ask) {
      if (!s.has_palette_color(act.point)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(NestedDepth, Examples) {
  EXPECT_EQ(nested_depth({iv(2, 4), iv(1, 5), iv(0, 6)}), 3);
  EXPECT_EQ(nested_depth({iv(1, 3), iv(0, 3)}), 1);
  EXPECT_EQ(nested_depth({}), 0);
}

TEST(NestedDepth, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<ChainInterval> fam;
    for (int i = 0; i < 7; ++i) {
      int lo = std::uniform_int_distribution<int>(0, 9)(rng);
      int hi = std::uniform_int_distribution<int>(lo, 9)(rng);
      fam.push_back(iv(lo, hi));
    }
    ASSERT_EQ(nested_depth(fam), brute_depth(fam)) << "seed " << seed;
  }
}

TEST(NestedDepth, RandomFamilyRespectsTheBound) {
  for (int d = 1; d <= 4; ++d)
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_LE(nested_depth(random_family(30, d, seed)), d);
}

TEST(WGameState, AvailableColors) {
  WGameState s(4, 2);
  EXPECT_EQ(available_colors(s, 1), (std::vector<int>{1, 2, kDelete}));
  s.present(iv(0, 2), 1);
  EXPECT_EQ(available_colors(s, 1), (std::vector<int>{2, kDelete}));
  EXPECT_EQ(available_colors(s, 3), (std::vector<int>{1, 2, kDelete}));
  WGameState one(2, 1);
  one.present(iv(0, 0), 1);
  EXPECT_EQ(available_colors(one, 0), std::vector<int>{kDelete});
}

TEST(WGameState, PresentationRules) {
  WGameState s(5, 2, std::vector<ChainInterval>{iv(1, 3)});
  s.assign(2, 1);
  EXPECT_THROW(s.present(iv(1, 3), 1), IllegalPresent);
  EXPECT_THROW(s.present(iv(0, 3), 2), IllegalPresent);
  EXPECT_THROW(s.present(iv(1, 3), 3), IllegalPresent);
  EXPECT_NO_THROW(s.present(iv(1, 3), 2));
  EXPECT_THROW(s.assign(1, 2), IllegalAssign);
  EXPECT_THROW(s.assign(2, 2), IllegalAssign);
}

TEST(WGameState, DeleteNeverConflicts) {
  WGameState s(3, 1);
  s.assign(1, kDelete);
  EXPECT_NO_THROW(s.present(iv(0, 2), 1));
  EXPECT_EQ(s.color(1), kDelete);
}

TEST(Painter, BaseCaseAnswersTheSingleColor) {
  WGameState s(3, 1);
  Painter p(1, 3);
  EXPECT_TRUE(presenter_action(s, {PresenterAction::Kind::ask, 1, {}, 0}, p));
  EXPECT_EQ(s.color(1), 1);
}

TEST(Painter, SealsASinglePointInterval) {
  WGameState s(3, 2, std::vector<ChainInterval>{iv(0, 0)});
  Painter p(2, 3);
  // forbidden (1,0) is color 2; the seal color (1,1) is color 1
  ASSERT_EQ(Painter::encode(1, 0), 2);
  EXPECT_TRUE(presenter_action(s, {PresenterAction::Kind::present, -1, iv(0, 0), 2}, p));
  EXPECT_EQ(s.color(0), 1);
  EXPECT_EQ(p.check_invariant(s), "");
  for (int x : {1, 2}) EXPECT_TRUE(presenter_action(s, {PresenterAction::Kind::ask, x, {}, 0}, p));
  EXPECT_TRUE(s.finished());
}

TEST(Painter, OneColorIsNotEnoughAtDepthTwo) {
  std::vector<PresenterAction> script{{PresenterAction::Kind::present, -1, iv(0, 0), 1},
                                      {PresenterAction::Kind::ask, 0, {}, 0}};
  EXPECT_FALSE(any_painter_survives_one_color(3, script));
  // and the recursive painter with its own palette of two survives it
  WGameState s(3, 2, std::vector<ChainInterval>{iv(0, 0)});
  Painter p(2, 3);
  EXPECT_TRUE(presenter_action(s, script[0], p));
  EXPECT_FALSE(s.uncolored(0));
}

TEST(Painter, CopiesAreIndependent) {
  auto fam = random_family(12, 2, 7);
  WGameState s(12, 4, fam);
  Painter p(3, 12);
  PresenterFuzzer fz(3, {}, fam);
  for (int i = 0; i < 4 && !s.finished(); ++i) presenter_action(s, fz.next(s), p);
  Painter copy = p;
  WGameState s2 = s;
  PresenterFuzzer f1(9, {}, fam), f2(9, {}, fam);
  while (!s.finished()) {
    presenter_action(s, f1.next(s), p);
    if (!s2.finished()) presenter_action(s2, f2.next(s2), copy);
  }
  EXPECT_TRUE(s2.finished());
  for (int x = 0; x < 12; ++x) EXPECT_EQ(s.color(x), s2.color(x));
  EXPECT_EQ(copy.check_invariant(s2), "");
}

TEST(PresenterFuzzer, SameSeedSameActions) {
  auto fam = random_family(20, 3, 1);
  WGameState s1(20, 4, fam), s2(20, 4, fam);
  Painter p1(3, 20), p2(3, 20);
  PresenterFuzzer a(5, {}, fam), b(5, {}, fam);
  while (!s1.finished()) {
    auto x = a.next(s1), y = b.next(s2);
    ASSERT_EQ(x.str(), y.str());
    presenter_action(s1, x, p1);
    presenter_action(s2, y, p2);
  }
}

TEST(PresenterFuzzer, AskOnlyMixAsks) {
  WGameState s(5, 2);
  PresenterFuzzer f(1, {0.0, 0.0, 1.0}, {});
  EXPECT_EQ(f.next(s).kind, PresenterAction::Kind::ask);
}

TEST(Painter, FuzzedGamesNeverStrand) {
  for (int w = 1; w <= 4; ++w)
    for (std::uint64_t g = 0; g < 60; ++g) {
      const int m = 4 + int(g % 28);
      auto fam = random_family(m, w - 1, g * 31 + std::uint64_t(w));
      PresenterFuzzer fz(g, {1.0, 2.0, 1.0}, fam, g % 2 == 1);
      auto r = run_wgame(m, w, fam, fz);
      ASSERT_TRUE(r.painter_won) << "w=" << w << " game " << g << ": " << r.failure;
    }
}

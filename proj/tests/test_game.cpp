#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pogame/agents.hpp"
#include "pogame/constructions.hpp"

using namespace pogame;

namespace {

std::shared_ptr<const Poset> share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

GameConfig coloring(int a, int b, int k, Mode mode = Mode::standard) { return {Variant::coloring, a, b, k, mode}; }

bool has_move(const std::vector<Move>& ms, const Move& m) { return std::find(ms.begin(), ms.end(), m) != ms.end(); }

// Oracle: x may take color c iff no colored point incomparable to x has c.
bool oracle_legal(const GameState& s, int x, int c) {
  for (int y = 0; y < int(s.size()); ++y)
    if (y != x && s.poset().incomparable(x, y) && s.status(y) == c) return false;
  return true;
}

}  // namespace

TEST(MonotoneChainPoset, SinglePointInterval) {
  MonotoneChainSpec spec;
  spec.entries.push_back({ChainInterval{0, 1, 1}, 1});
  Construction c = monotone_chain_poset(3, {spec});
  ASSERT_EQ(c.poset.size(), 4u);
  EXPECT_EQ(incomparables(c.poset, 3), std::vector<int>{1});
}

TEST(MonotoneChainPoset, OverlappingSpecsReachWidthThree) {
  MonotoneChainSpec s1, s2;
  s1.entries.push_back({ChainInterval{0, 1, 2}, 1});
  s2.entries.push_back({ChainInterval{0, 2, 3}, 1});
  Construction c = monotone_chain_poset(5, {s1, s2});
  EXPECT_EQ(width(c.poset), 3);
  EXPECT_TRUE(c.poset.incomparable(5, 6));
  EXPECT_TRUE(c.poset.incomparable(5, 2));
  EXPECT_TRUE(c.poset.incomparable(6, 2));
}

TEST(GameRules, IncomparableSameColorIsIllegal) {
  GameState s(share(antichain_poset(2)), coloring(1, 1, 1));
  s.apply(Actor::alice, Move::color_point(0, 1));
  EXPECT_FALSE(has_move(s.legal_moves(), Move::color_point(1, 1)));
  EXPECT_EQ(s.outcome().kind, OutcomeKind::bob_wins);
  EXPECT_THROW(s.apply(Actor::bob, Move::color_point(1, 1)), IllegalMove);
}

TEST(GameRules, ChainAcceptsEveryColor) {
  GameState s(share(chain_poset(4)), coloring(1, 1, 3));
  EXPECT_EQ(s.legal_moves().size(), 12u);
  s.apply(Actor::alice, Move::color_point(2, 2));
  EXPECT_EQ(s.legal_moves().size(), 9u);
}

TEST(GameRules, LegalMovesAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto p = share(random_poset(9, 0.3, seed));
    GameState s(p, coloring(2, 1, 3));
    RandomAgent alice(seed), bob(seed + 99);
    while (!s.over()) {
      auto moves = s.legal_moves();
      for (int x = 0; x < int(s.size()); ++x)
        for (int c = 1; c <= 3; ++c)
          ASSERT_EQ(has_move(moves, Move::color_point(x, c)), s.is_free(x) && oracle_legal(s, x, c));
      Agent& ag = s.turn() == Actor::alice ? static_cast<Agent&>(alice) : bob;
      s.apply(s.turn(), ag.next_move(s));
      ASSERT_TRUE(s.color_classes_are_chains());
    }
  }
}

TEST(GameRules, GrundyMovesIgnoreThePalette) {
  GameState s(share(antichain_poset(3)), {Variant::grundy, 1, 1, 1, Mode::standard});
  EXPECT_EQ(s.legal_moves().size(), 3u);
  s.apply(Actor::alice, Move::choose_point(0));
  s.apply(Actor::bob, Move::choose_point(1));
  EXPECT_EQ(s.status(1), 2);
  s.apply(Actor::alice, Move::choose_point(2));
  EXPECT_EQ(s.outcome(), (Outcome{OutcomeKind::value, 3}));
}

TEST(GameRules, FirstFitTakesTheLeastGap) {
  // point 3 is incomparable to 0, 1, 2 which form a chain
  Poset p = validate_poset({{0, 1}, {1, 2}}, 4);
  GameState s(share(p), coloring(3, 1, 3));
  EXPECT_EQ(s.first_fit_color(3), 1);
  s.apply(Actor::alice, Move::color_point(0, 1));
  s.apply(Actor::alice, Move::color_point(1, 3));
  EXPECT_EQ(s.first_fit_color(3), 2);
  s.apply(Actor::alice, Move::color_point(2, 2));
  EXPECT_EQ(s.first_fit_color(3), 4);
}

TEST(GameRules, AuxiliaryPassHandsTurnToBob) {
  GameState s(share(antichain_poset(4)), coloring(2, 1, 4, Mode::auxiliary));
  EXPECT_EQ(s.turn(), Actor::bob);
  EXPECT_FALSE(s.pass_allowed());
  EXPECT_THROW(s.apply(Actor::bob, Move::pass()), IllegalMove);
  s.apply(Actor::bob, Move::color_point(0, 1));
  EXPECT_EQ(s.turn(), Actor::alice);
  EXPECT_TRUE(s.pass_allowed());
  const int r = s.round();
  s.apply(Actor::alice, Move::pass());
  EXPECT_EQ(s.turn(), Actor::bob);
  EXPECT_EQ(s.round(), r + 1);
}

TEST(GameRules, StandardModeHasNoPass) {
  GameState s(share(antichain_poset(3)), coloring(1, 1, 3));
  EXPECT_FALSE(s.pass_allowed());
  EXPECT_NE(s.why_illegal(Actor::alice, Move::pass()), "");
}

TEST(GameRules, QuotaEndsTheTurn) {
  GameState s(share(antichain_poset(6)), coloring(2, 1, 6));
  s.apply(Actor::alice, Move::color_point(0, 1));
  EXPECT_EQ(s.turn(), Actor::alice);
  EXPECT_EQ(s.quota_left(), 1);
  s.apply(Actor::alice, Move::color_point(1, 2));
  EXPECT_EQ(s.turn(), Actor::bob);
  EXPECT_EQ(s.why_illegal(Actor::alice, Move::color_point(2, 3)), "wrong turn");
}

TEST(GameRules, ZeroQuotaTurnsAreSkipped) {
  GameState s(share(chain_poset(3)), coloring(0, 1, 1));
  EXPECT_EQ(s.turn(), Actor::bob);
  s.apply(Actor::bob, Move::color_point(0, 1));
  EXPECT_EQ(s.turn(), Actor::bob);
}

TEST(GameRules, CompletingTheColoringWinsMidTurn) {
  GameState s(share(chain_poset(1)), coloring(3, 1, 1));
  s.apply(Actor::alice, Move::color_point(0, 1));
  EXPECT_EQ(s.outcome().kind, OutcomeKind::alice_wins);
  EXPECT_TRUE(s.over());
}

TEST(GameRules, MarkingValueCountsBackDegree) {
  GameState s(share(antichain_poset(3)), {Variant::marking, 1, 1, 1, Mode::standard});
  s.apply(Actor::alice, Move::mark_point(0));
  s.apply(Actor::bob, Move::mark_point(2));
  EXPECT_EQ(s.transcript().back().result, 1);
  s.apply(Actor::alice, Move::mark_point(1));
  EXPECT_EQ(s.transcript().back().result, 2);
  EXPECT_EQ(s.outcome(), (Outcome{OutcomeKind::value, 3}));
}

TEST(GameRules, SoloGrundyMatchesStraightLineFirstFit) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Poset p = random_poset(12, 0.25, seed);
    std::vector<int> order(12);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
    GameState s(share(p), {Variant::grundy, 1, 0, 1, Mode::standard});
    for (int x : order) s.apply(Actor::alice, Move::choose_point(x));
    // independent oracle: first-fit over the incomparability graph
    std::vector<int> col(12, 0);
    int best = 0;
    for (int x : order) {
      int c = 1;
      for (bool clash = true; clash; ) {
        clash = false;
        for (int y = 0; y < 12; ++y)
          if (col[std::size_t(y)] == c && p.incomparable(x, y)) {
            clash = true;
            ++c;
            break;
          }
      }
      col[std::size_t(x)] = c;
      best = std::max(best, c);
    }
    EXPECT_EQ(s.outcome().value, best);
    EXPECT_EQ(first_fit_count(p, order), best);
  }
}

TEST(GameRules, TerminalColoringOutcomesAreExclusive) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto p = share(random_poset(10, 0.3, seed));
    RandomAgent alice(seed), bob(seed * 7 + 1);
    auto r = play_match(p, coloring(1, 1, 2), alice, bob);
    const auto& s = r.final_state;
    const bool all = s.free_count() == 0;
    EXPECT_EQ(r.transcript.outcome.kind == OutcomeKind::alice_wins, all);
    EXPECT_EQ(r.transcript.outcome.kind == OutcomeKind::bob_wins, !all);
  }
}

TEST(PlayMatch, ReplayReproducesTheFinalState) {
  auto p = share(random_poset(14, 0.3, 5));
  GreedyAgent alice;
  RandomAgent bob(3);
  auto r = play_match(p, coloring(2, 1, 4), alice, bob);
  GameState again = replay(p, r.transcript.config, r.transcript.moves);
  EXPECT_EQ(again.outcome(), r.transcript.outcome);
  for (int x = 0; x < 14; ++x) EXPECT_EQ(again.status(x), r.final_state.status(x));
  EXPECT_LE(r.transcript.moves.size(), 14u);
}

TEST(PlayMatch, FixedSeedsGiveIdenticalTranscripts) {
  auto p = share(random_poset(16, 0.2, 8));
  for (auto variant : {Variant::coloring, Variant::grundy, Variant::marking}) {
    GameConfig cfg{variant, 1, 2, 5, Mode::auxiliary};
    RandomAgent a1(11), b1(12), a2(11), b2(12);
    auto r1 = play_match(p, cfg, a1, b1);
    auto r2 = play_match(p, cfg, a2, b2);
    ASSERT_EQ(r1.transcript.moves.size(), r2.transcript.moves.size());
    for (std::size_t i = 0; i < r1.transcript.moves.size(); ++i)
      EXPECT_EQ(r1.transcript.moves[i].move, r2.transcript.moves[i].move);
  }
}

TEST(PlayMatch, AuxiliaryAliceRepliesWithAtMostA) {
  auto p = share(random_poset(20, 0.2, 2));
  RandomAgent alice(1), bob(2);
  auto r = play_match(p, coloring(2, 1, 6, Mode::auxiliary), alice, bob);
  ASSERT_FALSE(r.transcript.moves.empty());
  EXPECT_EQ(r.transcript.moves.front().actor, Actor::bob);
  int run = 0;
  for (const auto& m : r.transcript.moves) {
    if (m.actor == Actor::alice && !m.move.is_pass()) {
      ++run;
      EXPECT_LE(run, 2);
    } else {
      run = 0;
    }
  }
}

TEST(PlayMatch, IllegalAgentMoveIsRejected) {
  class Bad : public Agent {
   public:
    Move next_move(const GameState&) override { return Move::color_point(0, 1); }
    std::unique_ptr<Agent> clone() const override { return std::make_unique<Bad>(); }
    std::string name() const override { return "bad"; }
  };
  Bad a, b;
  EXPECT_THROW(play_match(share(antichain_poset(2)), coloring(1, 1, 2), a, b), AgentProtocolError);
}

#pragma once

#include <algorithm>
#include <iostream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pogame/game.hpp"

namespace pogame {

/// Uniform choice among legal moves (Pass included where allowed).
class RandomAgent : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  Move next_move(const GameState& s) override {
    auto moves = s.legal_moves();
    if (moves.empty()) throw AgentProtocolError("random agent asked to move in a finished game");
    return moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng_)];
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<RandomAgent>(*this); }
  std::string name() const override { return "random:" + std::to_string(seed_); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Lowest free point, least legal color. Passes only when nothing is legal.
class GreedyAgent : public Agent {
 public:
  Move next_move(const GameState& s) override {
    for (int x = 0; x < int(s.size()); ++x) {
      if (!s.is_free(x)) continue;
      switch (s.config().variant) {
        case Variant::coloring:
          for (int c = 1; c <= s.config().k; ++c)
            if (s.color_legal(x, c)) return Move::color_point(x, c);
          break;
        case Variant::grundy: return Move::choose_point(x);
        case Variant::marking: return Move::mark_point(x);
      }
    }
    return Move::pass();
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<GreedyAgent>(*this); }
  std::string name() const override { return "greedy"; }
};

/// Auxiliary-mode Alice that never colors anything.
class PassAgent : public Agent {
 public:
  Move next_move(const GameState& s) override {
    if (s.pass_allowed()) return Move::pass();
    return GreedyAgent().next_move(s);
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<PassAgent>(*this); }
  std::string name() const override { return "pass"; }
};

/// Static evaluation, from Alice's side: lower is better for Alice.
inline double static_eval(const GameState& s) {
  Outcome o = s.outcome();
  if (o.kind == OutcomeKind::alice_wins) return -1e9;
  if (o.kind == OutcomeKind::bob_wins) return 1e9;
  switch (s.config().variant) {
    case Variant::coloring: {
      double score = 0.0;
      for (int x = 0; x < int(s.size()); ++x) {
        if (!s.is_free(x)) continue;
        int a = s.available_count(x);
        score += a == 0 ? 1e6 : 1.0 / double(a);
      }
      return score;
    }
    case Variant::grundy: {
      if (o.kind == OutcomeKind::value) return 1e6 * o.value;
      double pot = 0.0;
      int worst = s.max_color();
      for (int x = 0; x < int(s.size()); ++x)
        if (s.is_free(x)) {
          int c = s.first_fit_color(x);
          worst = std::max(worst, c);
          pot += c;
        }
      return 1e3 * worst + pot;
    }
    case Variant::marking: {
      if (o.kind == OutcomeKind::value) return 1e6 * o.value;
      double pot = 0.0;
      int worst = s.max_back_degree();
      for (int x = 0; x < int(s.size()); ++x)
        if (s.is_free(x)) {
          worst = std::max(worst, s.marked_neighbours(x));
          pot += s.marked_neighbours(x);
        }
      return 1e3 * worst + pot;
    }
  }
  return 0.0;
}

/// Greedy search on static_eval. depth 1 scores own moves directly; depth 2
/// also lets the opponent answer with its best single move. Candidate lists
/// longer than `sample` are subsampled with a seeded shuffle.
class LookaheadAgent : public Agent {
 public:
  LookaheadAgent(int depth, std::uint64_t seed, std::size_t sample = 24)
      : depth_(depth), seed_(seed), sample_(sample), rng_(seed) {}

  Move next_move(const GameState& s) override {
    const Actor me = s.turn();
    const double sign = me == Actor::alice ? 1.0 : -1.0;  // minimise sign * eval
    auto moves = candidates(s, sample_);
    if (moves.empty()) throw AgentProtocolError("lookahead agent has no legal move");
    Move best = moves.front();
    double best_score = std::numeric_limits<double>::infinity();
    for (const Move& m : moves) {
      GameState t = s;
      t.apply(me, m);
      double score = sign * static_eval(t);
      if (depth_ >= 2 && !t.over() && t.turn() != me) {
        double reply_best = -std::numeric_limits<double>::infinity();
        for (const Move& r : candidates(t, sample_ / 2 + 1)) {
          GameState u = t;
          u.apply(u.turn(), r);
          reply_best = std::max(reply_best, sign * static_eval(u));
        }
        score = reply_best;
      }
      if (score < best_score) {
        best_score = score;
        best = m;
      }
    }
    return best;
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<LookaheadAgent>(*this); }
  std::string name() const override { return "lookahead" + std::to_string(depth_) + ":" + std::to_string(seed_); }

 private:
  std::vector<Move> candidates(const GameState& s, std::size_t limit) {
    auto moves = s.legal_moves();
    if (moves.size() > limit) {
      std::shuffle(moves.begin(), moves.end(), rng_);
      moves.resize(limit);
    }
    return moves;
  }
  int depth_;
  std::uint64_t seed_;
  std::size_t sample_;
  std::mt19937_64 rng_;
};

/// Reads moves from a stream: "x c" (coloring), "x" (grundy/marking) or
/// "pass". Illegal input is rejected with a reprompt.
class StreamAgent : public Agent {
 public:
  StreamAgent(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}
  Move next_move(const GameState& s) override {
    for (;;) {
      *out_ << to_string(s.turn()) << " (round " << s.round() << ", " << s.quota_left() << " left)> " << std::flush;
      std::string line;
      if (!std::getline(*in_, line)) throw AgentProtocolError("stdin agent: end of input");
      std::istringstream ls(line);
      std::string first;
      ls >> first;
      Move m;
      if (first == "pass") {
        m = Move::pass();
      } else {
        int x = 0, c = 0;
        try {
          x = std::stoi(first);
        } catch (...) {
          *out_ << "expected a point id or 'pass'\n";
          continue;
        }
        switch (s.config().variant) {
          case Variant::coloring:
            if (!(ls >> c)) {
              *out_ << "expected: <point> <color>\n";
              continue;
            }
            m = Move::color_point(x, c);
            break;
          case Variant::grundy: m = Move::choose_point(x); break;
          case Variant::marking: m = Move::mark_point(x); break;
        }
      }
      if (auto why = s.why_illegal(s.turn(), m); !why.empty()) {
        *out_ << "illegal: " << why << "\n";
        continue;
      }
      return m;
    }
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<StreamAgent>(*this); }
  std::string name() const override { return "stdin"; }

 private:
  std::istream* in_;
  std::ostream* out_;
};

}  // namespace pogame

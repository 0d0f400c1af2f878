#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pogame/poset.hpp"

namespace pogame {

enum class Variant { coloring, grundy, marking };
enum class Mode { standard, auxiliary };
enum class Actor { alice, bob };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::coloring: return "coloring";
    case Variant::grundy: return "grundy";
    case Variant::marking: return "marking";
  }
  return "?";
}
inline const char* to_string(Mode m) { return m == Mode::standard ? "standard" : "auxiliary"; }
inline const char* to_string(Actor a) { return a == Actor::alice ? "alice" : "bob"; }
inline Actor other(Actor a) { return a == Actor::alice ? Actor::bob : Actor::alice; }

inline Variant parse_variant(const std::string& s) {
  if (s == "coloring") return Variant::coloring;
  if (s == "grundy") return Variant::grundy;
  if (s == "marking") return Variant::marking;
  throw std::invalid_argument("unknown variant: " + s);
}
inline Mode parse_mode(const std::string& s) {
  if (s == "standard") return Mode::standard;
  if (s == "auxiliary") return Mode::auxiliary;
  throw std::invalid_argument("unknown mode: " + s);
}

struct GameConfig {
  Variant variant = Variant::coloring;
  int a = 1;
  int b = 1;
  int k = 1;  // palette size, coloring only
  Mode mode = Mode::standard;

  void validate() const {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("GameConfig: need a, b >= 0 and a + b >= 1");
    if (variant == Variant::coloring && k < 1) throw std::invalid_argument("GameConfig: palette must be nonempty");
  }
  Actor first() const { return mode == Mode::standard ? Actor::alice : Actor::bob; }
  int quota(Actor who) const { return who == Actor::alice ? a : b; }
};

struct Move {
  enum class Kind { color, choose, mark, pass };
  Kind kind = Kind::pass;
  int point = -1;
  int color = 0;

  static Move color_point(int x, int c) { return {Kind::color, x, c}; }
  static Move choose_point(int x) { return {Kind::choose, x, 0}; }
  static Move mark_point(int x) { return {Kind::mark, x, 0}; }
  static Move pass() { return {Kind::pass, -1, 0}; }
  bool is_pass() const { return kind == Kind::pass; }
  bool operator==(const Move&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::color: return "color(" + std::to_string(point) + "," + std::to_string(color) + ")";
      case Kind::choose: return "choose(" + std::to_string(point) + ")";
      case Kind::mark: return "mark(" + std::to_string(point) + ")";
      case Kind::pass: return "pass";
    }
    return "?";
  }
};

struct MoveRecord {
  Actor actor = Actor::alice;
  Move move;
  int round = 0;
  int result = 0;  // color given (coloring/grundy) or back-degree (marking)
};

enum class OutcomeKind { ongoing, alice_wins, bob_wins, value };

struct Outcome {
  OutcomeKind kind = OutcomeKind::ongoing;
  int value = 0;
  bool operator==(const Outcome&) const = default;
  std::string str() const {
    switch (kind) {
      case OutcomeKind::ongoing: return "ongoing";
      case OutcomeKind::alice_wins: return "alice-wins";
      case OutcomeKind::bob_wins: return "bob-wins";
      case OutcomeKind::value: return "value=" + std::to_string(value);
    }
    return "?";
  }
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position of a coloring, Grundy or marking game played directly on a
/// poset. Color classes are chains, so a color is legal at x iff no point
/// incomparable to x carries it.
class GameState {
 public:
  GameState(std::shared_ptr<const Poset> poset, GameConfig config) : poset_(std::move(poset)), config_(config) {
    config_.validate();
    const std::size_t n = poset_->size();
    status_.assign(n, 0);
    remaining_ = int(n);
    if (config_.variant == Variant::coloring) {
      blocked_.assign(n * std::size_t(config_.k + 1), 0);
      avail_.assign(n, config_.k);
    } else if (config_.variant == Variant::marking) {
      marked_nbrs_.assign(n, 0);
    }
    turn_ = config_.first();
    quota_ = config_.quota(turn_);
    if (quota_ == 0) {
      turn_ = other(turn_);
      quota_ = config_.quota(turn_);
    }
  }

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  const GameConfig& config() const { return config_; }
  std::size_t size() const { return poset_->size(); }

  /// Color for coloring/Grundy (0 = free); 1 if marked for marking.
  int status(int x) const { return status_[std::size_t(x)]; }
  bool is_free(int x) const { return status_[std::size_t(x)] == 0; }
  int free_count() const { return remaining_; }

  Actor turn() const { return turn_; }
  int quota_left() const { return quota_; }
  int round() const { return round_; }
  const std::vector<MoveRecord>& transcript() const { return transcript_; }

  bool color_legal(int x, int c) const {
    return is_free(x) && c >= 1 && c <= config_.k && blocked_[std::size_t(x) * std::size_t(config_.k + 1) + std::size_t(c)] == 0;
  }
  /// Number of points incomparable to x that carry color c.
  int blockers(int x, int c) const { return blocked_[std::size_t(x) * std::size_t(config_.k + 1) + std::size_t(c)]; }
  int available_count(int x) const { return avail_[std::size_t(x)]; }

  /// Some free point has no legal color left; the coloring game is then lost
  /// for Alice no matter how play continues.
  bool has_stuck_point() const {
    if (config_.variant != Variant::coloring) return false;
    for (std::size_t x = 0; x < status_.size(); ++x)
      if (status_[x] == 0 && avail_[x] == 0) return true;
    return false;
  }

  int first_fit_color(int x) const {
    const auto& inc = poset_->incomparables(x);
    std::vector<char> seen(inc.size() + 2, 0);
    for (int y : inc) {
      int c = status_[std::size_t(y)];
      if (c > 0 && std::size_t(c) < seen.size()) seen[std::size_t(c)] = 1;
    }
    int c = 1;
    while (seen[std::size_t(c)]) ++c;
    return c;
  }

  int marked_neighbours(int x) const { return marked_nbrs_[std::size_t(x)]; }
  int max_color() const { return max_color_; }
  int max_back_degree() const { return max_back_degree_; }

  std::vector<Move> legal_moves() const {
    std::vector<Move> out;
    if (outcome().kind != OutcomeKind::ongoing) return out;
    for (int x = 0; x < int(size()); ++x) {
      if (!is_free(x)) continue;
      switch (config_.variant) {
        case Variant::coloring:
          for (int c = 1; c <= config_.k; ++c)
            if (color_legal(x, c)) out.push_back(Move::color_point(x, c));
          break;
        case Variant::grundy: out.push_back(Move::choose_point(x)); break;
        case Variant::marking: out.push_back(Move::mark_point(x)); break;
      }
    }
    if (pass_allowed()) out.push_back(Move::pass());
    return out;
  }

  bool pass_allowed() const { return config_.mode == Mode::auxiliary && turn_ == Actor::alice; }

  /// Checks a move without applying it; returns an empty string when legal.
  std::string why_illegal(Actor actor, const Move& m) const {
    if (outcome().kind != OutcomeKind::ongoing) return "game over";
    if (actor != turn_) return "wrong turn";
    if (quota_ <= 0) return "quota exhausted";
    if (m.is_pass()) return pass_allowed() ? "" : "bad pass";
    if (m.point < 0 || m.point >= int(size())) return "no such point";
    if (!is_free(m.point)) return "point already taken";
    switch (config_.variant) {
      case Variant::coloring:
        if (m.kind != Move::Kind::color) return "coloring game expects ColorPoint";
        if (m.color < 1 || m.color > config_.k) return "color outside palette";
        if (!color_legal(m.point, m.color)) return "conflict: an incomparable point has color " + std::to_string(m.color);
        return "";
      case Variant::grundy: return m.kind == Move::Kind::choose ? "" : "grundy game expects ChoosePoint";
      case Variant::marking: return m.kind == Move::Kind::mark ? "" : "marking game expects MarkPoint";
    }
    return "";
  }

  void apply(Actor actor, const Move& m) {
    if (auto why = why_illegal(actor, m); !why.empty())
      throw IllegalMove(std::string(to_string(actor)) + " " + m.str() + ": " + why);
    MoveRecord rec{actor, m, round_, 0};
    if (m.is_pass()) {
      transcript_.push_back(rec);
      advance_turn();
      return;
    }
    const int x = m.point;
    switch (config_.variant) {
      case Variant::coloring: {
        status_[std::size_t(x)] = m.color;
        const std::size_t stride = std::size_t(config_.k + 1);
        for (int y : poset_->incomparables(x)) {
          auto& cell = blocked_[std::size_t(y) * stride + std::size_t(m.color)];
          if (cell++ == 0) --avail_[std::size_t(y)];
        }
        rec.result = m.color;
        max_color_ = std::max(max_color_, m.color);
        break;
      }
      case Variant::grundy: {
        int c = first_fit_color(x);
        status_[std::size_t(x)] = c;
        rec.result = c;
        max_color_ = std::max(max_color_, c);
        break;
      }
      case Variant::marking: {
        status_[std::size_t(x)] = 1;
        rec.result = marked_nbrs_[std::size_t(x)];
        max_back_degree_ = std::max(max_back_degree_, rec.result);
        for (int y : poset_->incomparables(x)) ++marked_nbrs_[std::size_t(y)];
        break;
      }
    }
    --remaining_;
    transcript_.push_back(rec);
    if (--quota_ == 0 && remaining_ > 0) advance_turn();
  }

  Outcome outcome() const {
    if (remaining_ == 0) {
      switch (config_.variant) {
        case Variant::coloring: return {OutcomeKind::alice_wins, 0};
        case Variant::grundy: return {OutcomeKind::value, max_color_};
        case Variant::marking: return {OutcomeKind::value, 1 + max_back_degree_};
      }
    }
    if (config_.variant == Variant::coloring) {
      // Legality does not depend on the mover, so "the player on turn is
      // stuck" is the same as "no free point has a legal color".
      for (std::size_t x = 0; x < status_.size(); ++x)
        if (status_[x] == 0 && avail_[x] > 0) return {};
      return {OutcomeKind::bob_wins, 0};
    }
    return {};
  }

  bool over() const { return outcome().kind != OutcomeKind::ongoing; }

  /// Chain-class invariant: every color class is a chain.
  bool color_classes_are_chains() const {
    if (config_.variant == Variant::marking) return true;
    for (int x = 0; x < int(size()); ++x) {
      if (status_[std::size_t(x)] == 0) continue;
      for (int y : poset_->incomparables(x))
        if (config_.variant == Variant::coloring && status_[std::size_t(y)] == status_[std::size_t(x)]) return false;
    }
    return true;
  }

 private:
  void advance_turn() {
    turn_ = other(turn_);
    if (turn_ == config_.first()) ++round_;
    quota_ = config_.quota(turn_);
    if (quota_ == 0) {
      turn_ = other(turn_);
      if (turn_ == config_.first()) ++round_;
      quota_ = config_.quota(turn_);
    }
  }

  std::shared_ptr<const Poset> poset_;
  GameConfig config_;
  std::vector<int> status_;
  std::vector<std::uint16_t> blocked_;
  std::vector<int> avail_;
  std::vector<int> marked_nbrs_;
  int remaining_ = 0;
  Actor turn_ = Actor::alice;
  int quota_ = 0;
  int round_ = 0;
  int max_color_ = 0;
  int max_back_degree_ = 0;
  std::vector<MoveRecord> transcript_;
};

inline std::vector<Move> legal_moves(const GameState& s) { return s.legal_moves(); }
inline int first_fit_color(const GameState& s, int x) { return s.first_fit_color(x); }
inline Outcome outcome(const GameState& s) { return s.outcome(); }
inline GameState apply_move(GameState s, Actor actor, const Move& m) {
  s.apply(actor, m);
  return s;
}

/// Straight-line first-fit over an order of the incomparability graph.
inline int first_fit_count(const Poset& p, const std::vector<int>& order) {
  std::vector<int> color(p.size(), 0);
  int best = 0;
  for (int x : order) {
    std::vector<char> used(p.size() + 2, 0);
    for (int y : p.incomparables(x))
      if (color[std::size_t(y)] > 0) used[std::size_t(color[std::size_t(y)])] = 1;
    int c = 1;
    while (used[std::size_t(c)]) ++c;
    color[std::size_t(x)] = c;
    best = std::max(best, c);
  }
  return best;
}

/// A strategy for one side. Agents read the opponent's moves off the state's
/// transcript. `clone` copies all memory so searches can branch on agents.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual Move next_move(const GameState& state) = 0;
  virtual std::unique_ptr<Agent> clone() const = 0;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> take_annotations() { return {}; }
};

class AgentProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Transcript {
  GameConfig config;
  std::uint64_t poset_hash = 0;
  std::vector<MoveRecord> moves;
  Outcome outcome;
  int colors_used = 0;
  int max_back_degree = 0;
  std::vector<std::pair<std::size_t, std::string>> annotations;  // (move index, text)
};

inline Transcript make_transcript(const GameState& s) {
  Transcript t;
  t.config = s.config();
  t.poset_hash = s.poset().hash();
  t.moves = s.transcript();
  t.outcome = s.outcome();
  t.colors_used = s.max_color();
  t.max_back_degree = s.max_back_degree();
  return t;
}

/// Replays moves from the initial state; throws IllegalMove on a bad record.
inline GameState replay(std::shared_ptr<const Poset> poset, const GameConfig& config, const std::vector<MoveRecord>& moves) {
  GameState s(std::move(poset), config);
  for (const auto& r : moves) s.apply(r.actor, r.move);
  return s;
}

struct MatchResult {
  Transcript transcript;
  GameState final_state;
};

inline MatchResult play_match(std::shared_ptr<const Poset> poset, const GameConfig& config, Agent& alice, Agent& bob,
                              std::size_t max_moves = 0) {
  GameState s(std::move(poset), config);
  std::vector<std::pair<std::size_t, std::string>> notes;
  if (max_moves == 0) max_moves = 4 * s.size() + 16 * (s.size() + 1);
  std::size_t steps = 0;
  while (!s.over()) {
    Agent& agent = s.turn() == Actor::alice ? alice : bob;
    Move m = agent.next_move(s);
    if (auto why = s.why_illegal(s.turn(), m); !why.empty())
      throw AgentProtocolError(agent.name() + " proposed illegal " + m.str() + ": " + why);
    s.apply(s.turn(), m);
    for (auto& a : agent.take_annotations()) notes.emplace_back(s.transcript().size(), std::move(a));
    if (++steps > max_moves) throw AgentProtocolError("match exceeded move cap (agents passing forever?)");
  }
  for (Agent* ag : {&alice, &bob})
    for (auto& a : ag->take_annotations()) notes.emplace_back(s.transcript().size(), std::move(a));
  Transcript t = make_transcript(s);
  t.annotations = std::move(notes);
  return {std::move(t), std::move(s)};
}

}  // namespace pogame

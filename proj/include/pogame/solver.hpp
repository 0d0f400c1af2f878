#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pogame/agents.hpp"
#include "pogame/constructions.hpp"
#include "pogame/game.hpp"
#include "pogame/poset.hpp"

namespace pogame {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverBudget {
  int max_points = 10;
  long long max_nodes = 20'000'000;
  bool memo = true;
  bool canonical = true;  // relabel colors by first appearance (coloring only)
};

struct SolveReport {
  std::string parameter;  // chig | grg | colg | grundy | col | width
  int value = 0;
  bool exact = true;
  GameConfig config;
  Transcript principal_variation;
  std::vector<int> witness_order;  // grundy: an order realising the value
  long long nodes = 0;
  long long memo_entries = 0;
};

/// Exact minimax on one (poset, config) pair over a packed state: 4 bits of
/// status per point, plus turn and remaining quota.
class GameSolver {
 public:
  GameSolver(const Poset& p, const GameConfig& cfg, SolverBudget budget = {}) : cfg_(cfg), budget_(budget) {
    cfg_.validate();
    n_ = int(p.size());
    if (n_ > budget_.max_points || n_ > 14)
      throw BudgetExceeded("solver: " + std::to_string(n_) + " points exceeds the budget of " +
                           std::to_string(std::min(budget_.max_points, 14)));
    if (cfg_.variant == Variant::coloring && cfg_.k > 15) throw BudgetExceeded("solver: palettes above 15 colors are not packed");
    if (cfg_.a > 7 || cfg_.b > 7) throw BudgetExceeded("solver: quotas above 7 are not packed");
    inc_.assign(std::size_t(n_), 0);
    for (int x = 0; x < n_; ++x)
      for (int y : p.incomparables(x)) inc_[std::size_t(x)] |= 1u << y;
  }

  /// Coloring: does Alice win from the start (or from `s`)?
  bool alice_wins() { return win(start()); }
  bool alice_wins(const GameState& s) { return win(from_game(s)); }

  /// Grundy / marking: optimal final value from the start (or from `s`).
  int value() { return value(start()); }
  int value(const GameState& s) {
    if (cfg_.variant == Variant::marking) return 1 + std::max(s.max_back_degree(), future(from_game(s)));
    return value(from_game(s));
  }

  /// Optimal move for the player on turn in `s`, first in legal-move order
  /// among equals.
  Move best_move(const GameState& s) {
    auto moves = s.legal_moves();
    if (moves.empty()) throw AgentProtocolError("solver asked for a move in a finished game");
    const bool alice = s.turn() == Actor::alice;
    Move best = moves.front();
    long best_score = 0;
    bool have = false;
    for (const Move& m : moves) {
      GameState t = s;
      t.apply(s.turn(), m);
      long score;
      if (cfg_.variant == Variant::coloring) score = (t.over() ? t.outcome().kind == OutcomeKind::alice_wins : win(from_game(t))) ? 0 : 1;
      else score = value(t);
      if (!alice) score = -score;
      if (!have || score < best_score) {
        best = m;
        best_score = score;
        have = true;
      }
    }
    return best;
  }

  /// Plays optimal moves for both sides from the start to the end of the
  /// game.
  Transcript principal_variation(std::shared_ptr<const Poset> p) {
    GameState s(std::move(p), cfg_);
    while (!s.over()) s.apply(s.turn(), best_move(s));
    return make_transcript(s);
  }

  long long nodes() const { return nodes_; }
  long long memo_entries() const { return (long long)(memo_.size()); }

 private:
  struct S {
    std::array<std::uint8_t, 16> st{};
    int turn = 0;  // 0 Alice, 1 Bob
    int quota = 0;
    int remaining = 0;
  };

  S start() const {
    S s;
    s.remaining = n_;
    s.turn = cfg_.first() == Actor::alice ? 0 : 1;
    s.quota = quota(s.turn);
    if (s.quota == 0) {
      s.turn ^= 1;
      s.quota = quota(s.turn);
    }
    return s;
  }

  S from_game(const GameState& g) const {
    S s;
    for (int x = 0; x < n_; ++x) {
      s.st[std::size_t(x)] = std::uint8_t(g.status(x));
      if (g.status(x) == 0) ++s.remaining;
    }
    s.turn = g.turn() == Actor::alice ? 0 : 1;
    s.quota = g.quota_left();
    return s;
  }

  int quota(int turn) const { return turn == 0 ? cfg_.a : cfg_.b; }

  void advance(S& s) const {
    s.turn ^= 1;
    s.quota = quota(s.turn);
    if (s.quota == 0) {
      s.turn ^= 1;
      s.quota = quota(s.turn);
    }
  }

  void after_move(S& s) const {
    --s.remaining;
    if (--s.quota == 0 && s.remaining > 0) advance(s);
  }

  bool pass_ok(const S& s) const { return cfg_.mode == Mode::auxiliary && s.turn == 0 && cfg_.b > 0; }

  std::uint64_t key(const S& s) const {
    std::uint64_t k = 0;
    for (int x = 0; x < n_; ++x) k = (k << 4) | s.st[std::size_t(x)];
    return (k << 4) | std::uint64_t(s.turn << 3) | std::uint64_t(s.quota);
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("solver: node budget of " + std::to_string(budget_.max_nodes) + " exhausted");
  }

  unsigned used_colors(const S& s, int x) const {
    unsigned used = 0;
    for (unsigned m = inc_[std::size_t(x)]; m; m &= m - 1) used |= 1u << s.st[std::size_t(__builtin_ctz(m))];
    return used & ~1u;
  }

  void canonicalize(S& s) const {
    std::array<std::uint8_t, 16> map{};
    std::uint8_t next = 1;
    for (int x = 0; x < n_; ++x) {
      auto& c = s.st[std::size_t(x)];
      if (c == 0) continue;
      if (map[c] == 0) map[c] = next++;
      c = map[c];
    }
  }

  bool win(S s) {
    if (s.remaining == 0) return true;
    const unsigned full = ((1u << (cfg_.k + 1)) - 1) & ~1u;
    for (int x = 0; x < n_; ++x)
      if (s.st[std::size_t(x)] == 0 && (full & ~used_colors(s, x)) == 0) return false;
    if (budget_.canonical) canonicalize(s);
    int top = 0;
    for (int x = 0; x < n_; ++x) top = std::max(top, int(s.st[std::size_t(x)]));
    const std::uint64_t k = key(s);
    if (budget_.memo) {
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second != 0;
    }
    tick();
    const bool alice = s.turn == 0;
    bool result = !alice;
    auto visit = [&](const S& child) {
      bool w = win(child);
      if (alice && w) result = true;
      if (!alice && !w) result = false;
      return result != !alice;  // true once decided
    };
    bool done = false;
    if (pass_ok(s)) {
      S c = s;
      advance(c);
      done = visit(c);
    }
    const int limit = budget_.canonical ? std::min(cfg_.k, top + 1) : cfg_.k;
    for (int x = 0; x < n_ && !done; ++x) {
      if (s.st[std::size_t(x)] != 0) continue;
      const unsigned used = used_colors(s, x);
      for (int col = 1; col <= limit && !done; ++col) {
        if (used & (1u << col)) continue;
        S c = s;
        c.st[std::size_t(x)] = std::uint8_t(col);
        after_move(c);
        done = visit(c);
      }
    }
    if (budget_.memo) memo_[k] = result ? 1 : 0;
    return result;
  }

  int first_fit(const S& s, int x) const {
    unsigned used = 0;
    for (unsigned m = inc_[std::size_t(x)]; m; m &= m - 1) used |= 1u << s.st[std::size_t(__builtin_ctz(m))];
    int c = 1;
    while (used & (1u << c)) ++c;
    return c;
  }

  int back_degree(const S& s, int x) const {
    int d = 0;
    for (unsigned m = inc_[std::size_t(x)]; m; m &= m - 1) d += s.st[std::size_t(__builtin_ctz(m))] != 0;
    return d;
  }

  /// Largest color so far (grundy) or largest back-degree so far is folded
  /// in by the caller; this returns the optimal future maximum.
  int future(const S& s) {
    if (s.remaining == 0) return 0;
    const std::uint64_t k = key(s);
    if (budget_.memo) {
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    tick();
    const bool alice = s.turn == 0;
    int best = alice ? 1 << 20 : -1;
    if (pass_ok(s)) {
      S c = s;
      advance(c);
      best = future(c);
    }
    for (int x = 0; x < n_; ++x) {
      if (s.st[std::size_t(x)] != 0) continue;
      S c = s;
      int now;
      if (cfg_.variant == Variant::grundy) {
        now = first_fit(s, x);
        c.st[std::size_t(x)] = std::uint8_t(now);
      } else {
        now = back_degree(s, x);
        c.st[std::size_t(x)] = 1;
      }
      after_move(c);
      int v = std::max(now, future(c));
      best = alice ? std::min(best, v) : std::max(best, v);
    }
    if (budget_.memo) memo_[k] = best;
    return best;
  }

  int value(const S& s) {
    if (cfg_.variant == Variant::coloring) throw std::logic_error("GameSolver::value is for grundy and marking games");
    // Past back-degrees are not recoverable from the marked set, so marking
    // values from mid-game go through value(const GameState&).
    if (cfg_.variant == Variant::marking) return 1 + future(s);
    int past = 0;
    for (int x = 0; x < n_; ++x) past = std::max(past, int(s.st[std::size_t(x)]));
    return std::max(past, future(s));
  }

  GameConfig cfg_;
  SolverBudget budget_;
  int n_ = 0;
  std::vector<unsigned> inc_;
  std::unordered_map<std::uint64_t, int> memo_;
  long long nodes_ = 0;
};

/// Color-permutation canonical form of a coloring-game state: colors
/// renamed by first appearance in point order, plus turn and quota.
inline std::string canonical_key(const GameState& s) {
  std::vector<int> map(std::size_t(s.config().k + 1), 0);
  int next = 1;
  std::string out;
  for (int x = 0; x < int(s.size()); ++x) {
    int c = s.status(x);
    if (c != 0 && s.config().variant == Variant::coloring) {
      if (map[std::size_t(c)] == 0) map[std::size_t(c)] = next++;
      c = map[std::size_t(c)];
    }
    out += std::to_string(c) + ",";
  }
  out += to_string(s.turn());
  out += ":" + std::to_string(s.quota_left());
  return out;
}

/// Least k for which Alice wins the coloring game, trying k = width(P),
/// width(P)+1, ... and solving each k on its own.
inline SolveReport game_chromatic_value(const Poset& p, int a, int b, Mode mode = Mode::standard, SolverBudget budget = {}) {
  if (int(p.size()) > budget.max_points) throw BudgetExceeded("solver: poset larger than the budget");
  SolveReport r;
  r.parameter = "chig";
  auto pp = std::make_shared<const Poset>(p);
  for (int k = std::max(1, width(p));; ++k) {
    GameConfig cfg{Variant::coloring, a, b, k, mode};
    GameSolver solver(p, cfg, budget);
    bool w = solver.alice_wins();
    r.nodes += solver.nodes();
    r.memo_entries += solver.memo_entries();
    if (w || k >= int(p.size())) {
      r.value = k;
      r.config = cfg;
      r.principal_variation = solver.principal_variation(pp);
      return r;
    }
  }
}

inline SolveReport grundy_game_value(const Poset& p, int a, int b, Mode mode = Mode::standard, SolverBudget budget = {}) {
  SolveReport r;
  r.parameter = "grg";
  r.config = GameConfig{Variant::grundy, a, b, 1, mode};
  GameSolver solver(p, r.config, budget);
  r.value = solver.value();
  r.principal_variation = solver.principal_variation(std::make_shared<const Poset>(p));
  r.nodes = solver.nodes();
  r.memo_entries = solver.memo_entries();
  return r;
}

inline SolveReport marking_game_value(const Poset& p, int a, int b, Mode mode = Mode::standard, SolverBudget budget = {}) {
  SolveReport r;
  r.parameter = "colg";
  r.config = GameConfig{Variant::marking, a, b, 1, mode};
  GameSolver solver(p, r.config, budget);
  r.value = solver.value();
  r.principal_variation = solver.principal_variation(std::make_shared<const Poset>(p));
  r.nodes = solver.nodes();
  r.memo_entries = solver.memo_entries();
  return r;
}

/// Coloring number: 1 + degeneracy of the incomparability graph, computed
/// by smallest-last ordering.
inline int coloring_number(const Poset& p) {
  const int n = int(p.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(std::size_t(n), 0);
  for (int x = 0; x < n; ++x) deg[std::size_t(x)] = int(p.incomparables(x).size());
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int x = 0; x < n; ++x)
      if (!gone[std::size_t(x)] && (v < 0 || deg[std::size_t(x)] < deg[std::size_t(v)])) v = x;
    degeneracy = std::max(degeneracy, deg[std::size_t(v)]);
    gone[std::size_t(v)] = 1;
    for (int y : p.incomparables(v))
      if (!gone[std::size_t(y)]) --deg[std::size_t(y)];
  }
  return n == 0 ? 0 : degeneracy + 1;
}

struct GrundyResult {
  int value = 0;
  bool exact = true;  // false: node budget ran out, value is a lower bound
  std::vector<int> order;
  long long nodes = 0;
};

namespace detail {

/// Per-vertex cap on the first-fit color a vertex can ever receive: color c
/// at v needs c-1 neighbours able to take the colors 1..c-1. Iterated from
/// degree + 1 down to a fixpoint.
inline std::vector<int> grundy_vertex_bounds(const Poset& p) {
  const int n = int(p.size());
  std::vector<int> ub(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) ub[std::size_t(x)] = int(p.incomparables(x).size()) + 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      std::vector<int> nb;
      for (int y : p.incomparables(x)) nb.push_back(ub[std::size_t(y)]);
      std::sort(nb.begin(), nb.end());
      int t = 0;
      for (int u : nb)
        if (u >= t + 1) ++t;
      if (t + 1 < ub[std::size_t(x)]) {
        ub[std::size_t(x)] = t + 1;
        changed = true;
      }
    }
  }
  return ub;
}

}  // namespace detail

inline int grundy_upper_bound(const Poset& p) {
  auto ub = detail::grundy_vertex_bounds(p);
  return ub.empty() ? 0 : *std::max_element(ub.begin(), ub.end());
}

namespace detail {

/// Branch and bound over first-fit configurations that only looks for
/// orders using more than `floor` colors. When none exists the result has
/// value `floor` and an empty order.
inline GrundyResult grundy_above(const Poset& p, long long max_nodes, int floor) {
  const int n = int(p.size());
  GrundyResult res;
  if (n == 0) return res;
  const auto vub = grundy_vertex_bounds(p);
  const int global_ub = *std::max_element(vub.begin(), vub.end());
  std::vector<int> color(std::size_t(n), 0), order, best_order;
  std::unordered_set<std::string> seen;
  int best = floor;
  bool out_of_budget = false;

  std::function<void(int)> dfs = [&](int cur) {
    if (best >= global_ub || out_of_budget) return;
    if (++res.nodes > max_nodes) {
      out_of_budget = true;
      return;
    }
    if (cur > best) {
      best = cur;
      best_order = order;
    }
    // Bound: any free vertex ends at most at its static cap, and at most one
    // above the colors it can still see.
    int bound = cur;
    for (int x = 0; x < n; ++x) {
      if (color[std::size_t(x)] != 0) continue;
      int free_nb = 0;
      unsigned long long seen_colors = 0;
      for (int y : p.incomparables(x)) {
        if (color[std::size_t(y)] == 0) ++free_nb;
        else seen_colors |= 1ull << color[std::size_t(y)];
      }
      bound = std::max(bound, std::min(vub[std::size_t(x)], __builtin_popcountll(seen_colors) + free_nb + 1));
    }
    if (bound <= best) return;
    if (n <= 20) {
      std::string key(color.begin(), color.end());
      if (!seen.insert(key).second) return;
    }
    for (int x = 0; x < n; ++x) {
      if (color[std::size_t(x)] != 0) continue;
      unsigned long long used = 0;
      for (int y : p.incomparables(x)) used |= 1ull << color[std::size_t(y)];
      int c = 1;
      while (used & (1ull << c)) ++c;
      color[std::size_t(x)] = c;
      order.push_back(x);
      dfs(std::max(cur, c));
      order.pop_back();
      color[std::size_t(x)] = 0;
      if (best >= global_ub || out_of_budget) return;
    }
  };
  dfs(0);
  res.value = best;
  res.exact = !out_of_budget;
  if (best_order.empty()) return res;
  // Complete the witness with the remaining points; first-fit colors of the
  // prefix do not change.
  std::vector<char> in(std::size_t(n), 0);
  for (int x : best_order) in[std::size_t(x)] = 1;
  for (int x = 0; x < n; ++x)
    if (!in[std::size_t(x)]) best_order.push_back(x);
  res.order = best_order;
  return res;
}

}  // namespace detail

/// Largest number of colors first-fit uses over all orders. Branch and bound
/// over first-fit configurations; past the node budget the best value found
/// is returned with exact = false.
inline GrundyResult grundy_number(const Poset& p, long long max_nodes = 20'000'000) {
  return detail::grundy_above(p, max_nodes, 0);
}

struct BestResponse {
  Actor searcher = Actor::alice;
  bool searcher_wins = false;  // coloring games
  int value = 0;               // grundy / marking: searcher's best final value
  Transcript line;             // witness line
  long long nodes = 0;
};

/// Exhaustive search for the best reply to a fixed agent playing `fixed`.
/// In coloring games a state with an uncolorable free point counts as lost
/// for Alice.
inline BestResponse best_response_search(std::shared_ptr<const Poset> p, const GameConfig& cfg, const Agent& fixed_agent,
                                         Actor fixed, long long max_nodes = 5'000'000) {
  BestResponse out;
  out.searcher = other(fixed);
  const bool coloring = cfg.variant == Variant::coloring;
  const bool alice_searches = out.searcher == Actor::alice;
  long long nodes = 0;

  // Returns (score for searcher, lower is better) and fills the line.
  std::function<int(GameState&, Agent&, std::vector<Move>&)> rec = [&](GameState& s, Agent& agent,
                                                                       std::vector<Move>& line) -> int {
    if (++nodes > max_nodes) throw BudgetExceeded("best_response_search: node budget exhausted");
    for (;;) {
      if (coloring) {
        if (s.free_count() == 0) return alice_searches ? 0 : 1;
        if (s.has_stuck_point()) return alice_searches ? 1 : 0;
      }
      if (s.over()) {
        int v = s.outcome().value;
        return alice_searches ? v : -v;
      }
      if (s.turn() != fixed) break;
      Move m = agent.next_move(s);
      s.apply(fixed, m);
      line.push_back(m);
    }
    int best = 1 << 20;
    std::vector<Move> best_line;
    for (const Move& m : s.legal_moves()) {
      GameState t = s;
      t.apply(t.turn(), m);
      auto a2 = agent.clone();
      std::vector<Move> sub{m};
      int v = rec(t, *a2, sub);
      if (v < best) {
        best = v;
        best_line = std::move(sub);
      }
      if (coloring && best == 0) break;
    }
    line.insert(line.end(), best_line.begin(), best_line.end());
    return best;
  };

  GameState s(p, cfg);
  auto agent = fixed_agent.clone();
  std::vector<Move> line;
  int score = rec(s, *agent, line);
  out.nodes = nodes;
  if (coloring) out.searcher_wins = score == 0;
  else out.value = alice_searches ? score : -score;

  // Replay the witness line and finish it with greedy moves if it stopped
  // at a decided coloring position.
  GameState r(p, cfg);
  for (const Move& m : line) r.apply(r.turn(), m);
  while (!r.over()) r.apply(r.turn(), GreedyAgent().next_move(r));
  out.line = make_transcript(r);
  return out;
}

/// Agent playing solver-optimal moves. depth 0 is exact; depth D > 0 is a
/// D-ply search on static_eval for posets beyond the solver budget.
class MinimaxAgent : public Agent {
 public:
  explicit MinimaxAgent(int depth = 0, SolverBudget budget = {}) : depth_(depth), budget_(budget) {}

  Move next_move(const GameState& s) override {
    if (depth_ == 0 || int(s.size()) <= budget_.max_points) {
      if (!solver_) solver_ = std::make_shared<GameSolver>(s.poset(), s.config(), budget_);
      return solver_->best_move(s);
    }
    const bool alice = s.turn() == Actor::alice;
    Move best = Move::pass();
    double best_v = 0;
    bool have = false;
    for (const Move& m : s.legal_moves()) {
      GameState t = s;
      t.apply(s.turn(), m);
      double v = search(t, depth_ - 1);
      if (!alice) v = -v;
      if (!have || v < best_v) {
        best = m;
        best_v = v;
        have = true;
      }
    }
    return best;
  }

  std::unique_ptr<Agent> clone() const override { return std::make_unique<MinimaxAgent>(*this); }
  std::string name() const override { return "minimax:" + std::to_string(depth_); }

 private:
  double search(const GameState& s, int depth) const {
    if (depth <= 0 || s.over()) return static_eval(s);
    const bool alice = s.turn() == Actor::alice;
    double best = alice ? 1e18 : -1e18;
    for (const Move& m : s.legal_moves()) {
      GameState t = s;
      t.apply(s.turn(), m);
      double v = search(t, depth - 1);
      best = alice ? std::min(best, v) : std::max(best, v);
    }
    return best;
  }

  int depth_;
  SolverBudget budget_;
  std::shared_ptr<GameSolver> solver_;  // shared between clones; the memo only grows
};

struct Width2Hit {
  Construction construction;
  int grundy = 0;
  std::vector<int> order;
};

struct Width2Search {
  std::optional<Width2Hit> hit;   // first poset reaching the target, smallest n first
  std::optional<Width2Hit> best;  // largest Grundy number seen
  long long examined = 0;
  bool exhaustive = true;  // false once some size was only sampled
};

/// Searches two-chain monotone specs for a width-2 poset with Grundy number
/// at least `target`, smallest size first. Sizes up to `exhaustive_max` are
/// enumerated exhaustively; larger sizes are sampled with `seed`, and their
/// Grundy numbers may be lower bounds. Without `track_best` only posets that
/// can reach the target are solved, which is much faster.
inline Width2Search search_width2_grundy_report(int n_max, int target, int exhaustive_max = 12, std::uint64_t seed = 1,
                                                long long samples_per_size = 2000, long long grundy_nodes = 200000,
                                                bool track_best = true) {
  Width2Search out;
  auto test = [&](int m, const std::vector<ChainInterval>& side, bool exhaustive) {
    Construction c = two_chain_poset(m, side);
    ++out.examined;
    if (width(c.poset) != 2) return false;
    const int ub = grundy_upper_bound(c.poset);
    const int floor = track_best ? std::min(target - 1, out.best ? out.best->grundy : 0) : target - 1;
    if (ub <= floor) return false;
    // Only an order beating the floor matters here.
    auto g = detail::grundy_above(c.poset, exhaustive ? 20'000'000 : grundy_nodes, floor);
    if (g.order.empty()) return false;
    out.best = Width2Hit{c, g.value, g.order};
    if (g.value >= target) {
      out.hit = Width2Hit{std::move(c), g.value, g.order};
      return true;
    }
    return false;
  };
  for (int n = 2; n <= n_max && !out.hit; ++n) {
    if (n <= exhaustive_max) {
      for_each_two_chain_spec(n, [&](int m, const std::vector<ChainInterval>& side) { return test(m, side, true); });
      continue;
    }
    out.exhaustive = false;
    for (int m = (n + 1) / 2; m < n && !out.hit; ++m) {
      const int s = n - m;
      std::mt19937_64 rng(seed ^ (std::uint64_t(n) << 32) ^ std::uint64_t(m));
      for (long long t = 0; t < samples_per_size && !out.hit; ++t) {
        std::vector<int> los, his;
        for (int j = 0; j < s; ++j) {
          int lo = std::uniform_int_distribution<int>(0, m)(rng);
          los.push_back(lo);
          his.push_back(std::uniform_int_distribution<int>(lo - 1, m - 1)(rng));
        }
        std::sort(los.begin(), los.end());
        std::sort(his.begin(), his.end());
        std::vector<ChainInterval> side;
        bool ok = true;
        for (int j = 0; j < s; ++j) {
          if (his[std::size_t(j)] < los[std::size_t(j)] - 1) ok = false;
          side.push_back({0, los[std::size_t(j)], his[std::size_t(j)]});
        }
        if (ok) test(m, side, false);
      }
    }
  }
  return out;
}

inline std::optional<Width2Hit> search_width2_grundy(int n_max, int target) {
  if (target <= 1) {
    if (n_max < 1) return std::nullopt;
    return Width2Hit{monotone_chain_poset(1, {}), 1, {0}};
  }
  return search_width2_grundy_report(n_max, target, 12, 1, 2000, 200000, false).hit;
}

}  // namespace pogame

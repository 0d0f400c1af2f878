#pragma once

#include <cmath>
#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pogame/agents.hpp"
#include "pogame/constructions.hpp"
#include "pogame/game.hpp"
#include "pogame/wgame.hpp"

namespace pogame {

/// Loud failure of a scripted strategy: undersized construction, broken
/// invariant, or a translation that the real game rejects.
class StrategyFailure : public std::runtime_error {
 public:
  StrategyFailure(std::string kind, const std::string& what) : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

namespace detail {

/// Colors that no point of the base interval [lo, hi] may take any more.
inline std::vector<char> dead_colors(const GameState& s, const std::vector<int>& base, int lo, int hi) {
  const int k = s.config().k;
  std::vector<char> dead(std::size_t(k + 1), 0);
  if (lo > hi) return dead;
  for (int c = 1; c <= k; ++c) {
    bool all = true;
    for (int p = lo; p <= hi && all; ++p) all = s.blockers(base[std::size_t(p)], c) > 0;
    dead[std::size_t(c)] = all ? 1 : 0;
  }
  return dead;
}

inline int count_set(const std::vector<char>& v) {
  int n = 0;
  for (char c : v) n += c ? 1 : 0;
  return n;
}

/// Shrinks [lo, hi] around a newly colored position p: keep the larger
/// side, the lower one on ties.
inline void shrink_region(int& lo, int& hi, int p) {
  if (p < lo || p > hi) return;
  int left = p - lo, right = hi - p;
  if (left >= right) hi = p - 1;
  else lo = p + 1;
}

inline Move first_legal(const GameState& s) { return GreedyAgent().next_move(s); }

}  // namespace detail

/// Bob in the auxiliary (1,1) coloring game on two chains C, C' where C'
/// realises every boundary interval of C with 2k duplicates.
///
/// Bob keeps a region I of uncolored base points and a set A of colored
/// C'-points incomparable to all of I, one dead color per point. Each move
/// extends I to a boundary interval (prefix [0, hi] or suffix [lo, m-1]) and
/// colors a fresh duplicate with a live color. A live color that Alice has
/// put on a base point next to I is legal on one side only; Bob kills such a
/// color first.
class BobLemma2Agent : public Agent {
 public:
  BobLemma2Agent(std::shared_ptr<const ConstructionMeta> meta, int k) : meta_(std::move(meta)), k_(k) {
    if (!meta_ || meta_->chains.size() != 2) throw std::invalid_argument("BobLemma2Agent: needs two-chain metadata");
    lo_ = 0;
    hi_ = meta_->base_length() - 1;
  }

  Move next_move(const GameState& s) override {
    if (s.config().k != k_) throw std::invalid_argument("BobLemma2Agent: palette size mismatch");
    absorb(s);
    if (victory_) return detail::first_legal(s);
    const auto& base = meta_->chains[0];
    auto dead = detail::dead_colors(s, base, lo_, hi_);
    if (lo_ > hi_) throw StrategyFailure("RegionCollapse", "lemma2 region became empty");
    if (detail::count_set(dead) == k_) {
      victory_ = true;
      return detail::first_legal(s);
    }
    const int m = meta_->base_length();
    const ChainInterval prefix{0, 0, hi_}, suffix{0, lo_, m - 1};
    auto pick = [&](const ChainInterval& iv, int c) -> int {
      for (int x : meta_->duplicates(1, iv))
        if (s.is_free(x) && s.color_legal(x, c)) return x;
      return -1;
    };
    int chosen = -1, color = 0;
    // Colors legal on one side only come first.
    for (int c = 1; c <= k_ && chosen < 0; ++c) {
      if (dead[std::size_t(c)]) continue;
      int xp = pick(prefix, c), xs = pick(suffix, c);
      if ((xp < 0) != (xs < 0)) {
        chosen = xp >= 0 ? xp : xs;
        color = c;
      }
    }
    for (int c = 1; c <= k_ && chosen < 0; ++c) {
      if (dead[std::size_t(c)]) continue;
      int x = pick(prefix, c);
      if (x < 0) x = pick(suffix, c);
      if (x >= 0) {
        chosen = x;
        color = c;
      }
    }
    if (chosen < 0) throw StrategyFailure("SupplyExhausted", "no duplicate of a boundary interval around [" +
                                                                 std::to_string(lo_) + "," + std::to_string(hi_) +
                                                                 "] takes a live color");
    a_points_.push_back(chosen);
    ++bob_moves_;
    check_after_move(s, chosen, color);
    return Move::color_point(chosen, color);
  }

  std::unique_ptr<Agent> clone() const override { return std::make_unique<BobLemma2Agent>(*this); }
  std::string name() const override { return "lemma2"; }
  std::vector<std::string> take_annotations() override { return std::exchange(notes_, {}); }

  bool victory() const { return victory_; }
  int region_lo() const { return lo_; }
  int region_hi() const { return hi_; }
  const std::vector<int>& a_points() const { return a_points_; }
  int bob_moves() const { return bob_moves_; }

 private:
  void absorb(const GameState& s) {
    const auto& tr = s.transcript();
    for (; seen_ < tr.size(); ++seen_) {
      const auto& r = tr[seen_];
      if (r.actor != Actor::alice || r.move.is_pass()) continue;
      const auto& role = meta_->roles[std::size_t(r.move.point)];
      if (role.kind == RoleKind::base) detail::shrink_region(lo_, hi_, role.position);
    }
  }

  void check_after_move(const GameState& s, int x, int c) {
    const auto& iv = meta_->roles[std::size_t(x)].interval;
    // (a) the new A-point is incomparable to all of I.
    if (!(iv.lo <= lo_ && hi_ <= iv.hi)) throw StrategyFailure("InvariantViolated", "A-point misses part of I");
    // (b) distinct colors on Bob's A-points.
    std::vector<char> seen(std::size_t(k_ + 1), 0);
    for (int y : a_points_) {
      int cy = y == x ? c : s.status(y);
      if (seen[std::size_t(cy)]) throw StrategyFailure("InvariantViolated", "two A-points share a color");
      seen[std::size_t(cy)] = 1;
    }
    // (c) I does not shrink faster than halving.
    const int m = meta_->base_length();
    const int rounds = bob_moves_;
    const double floor_size = double(m) / std::pow(2.0, rounds) - rounds;
    if (double(hi_ - lo_ + 1) < floor_size) throw StrategyFailure("InvariantViolated", "region shrank too fast");
    auto dead = detail::dead_colors(s, meta_->chains[0], lo_, hi_);
    dead[std::size_t(c)] = 1;
    int d = detail::count_set(dead);
    notes_.push_back("lemma2 move=" + std::to_string(bob_moves_) + " I=[" + std::to_string(lo_) + "," +
                     std::to_string(hi_) + "] dead=" + std::to_string(d));
    if (d == k_) {
      victory_ = true;
      notes_.push_back("lemma2 victory: all " + std::to_string(k_) + " colors dead, |I|=" + std::to_string(hi_ - lo_ + 1));
    }
  }

  std::shared_ptr<const ConstructionMeta> meta_;
  int k_;
  int lo_ = 0, hi_ = -1;
  std::vector<int> a_points_;
  int bob_moves_ = 0;
  bool victory_ = false;
  std::size_t seen_ = 0;
  std::vector<std::string> notes_;
};

/// Bob in the auxiliary (a,1) coloring game on the w-chain construction.
/// Phase i works with side chain C_i, whose points are incomparable to
/// windows of n_i base points, and ends once ceil(r_i / (floor(a/2) + 1))
/// colors died during it.
class BobLemma4Agent : public Agent {
 public:
  BobLemma4Agent(std::shared_ptr<const ConstructionMeta> meta, int a, int k) : meta_(std::move(meta)), a_(a), k_(k) {
    if (!meta_ || meta_->sizes.empty()) throw std::invalid_argument("BobLemma4Agent: needs lemma4 metadata");
    w_ = int(meta_->sizes.size()) + 1;
    const double bound = std::pow(1.0 + 1.0 / double(a / 2), double(w_ - 1));
    if (a < 2 || double(k) >= bound)
      throw std::invalid_argument("BobLemma4Agent: needs a >= 2 and k < (1 + 1/floor(a/2))^(w-1) = " +
                                  std::to_string(bound));
    lo_ = 0;
    hi_ = meta_->base_length() - 1;
    r_.push_back(k);
    phase_kills_.push_back(0);
    phase_bonus_.push_back(0);
    dead_count_ = 0;
  }

  static int threshold(int r, int a) { return (r + a / 2) / (a / 2 + 1); }

  Move next_move(const GameState& s) override {
    if (s.config().k != k_) throw std::invalid_argument("BobLemma4Agent: palette size mismatch");
    absorb(s);
    if (victory_) return detail::first_legal(s);
    if (lo_ > hi_) throw StrategyFailure("RegionCollapse", "lemma4 region became empty");
    const auto& base = meta_->chains[0];
    auto dead = detail::dead_colors(s, base, lo_, hi_);
    int d = detail::count_set(dead);
    if (d > dead_count_) {
      phase_bonus_.back() += d - dead_count_;
      dead_count_ = d;
      advance_phases();
    }
    if (dead_count_ == k_) {
      declare_victory();
      return detail::first_legal(s);
    }

    const int chain = phase_;
    const int size = meta_->sizes[std::size_t(phase_ - 1)];
    const int m = meta_->base_length();
    int best_x = -1, best_c = 0, best_dead = -1, best_len = -1, best_lo = 0, best_hi = -1;
    for (int start = std::max(0, lo_ - size + 1); start <= std::min(hi_, m - size); ++start) {
      const ChainInterval J{0, start, start + size - 1};
      const int nlo = std::max(lo_, J.lo), nhi = std::min(hi_, J.hi);
      if (nlo > nhi) continue;
      const int len = nhi - nlo + 1;
      if (len < best_len) continue;
      const auto& dups = meta_->duplicates(chain, J);
      std::vector<char> dead_sub;
      for (int c = 1; c <= k_; ++c) {
        int x = -1;
        for (int y : dups)
          if (s.is_free(y) && s.color_legal(y, c)) {
            x = y;
            break;
          }
        if (x < 0) continue;
        if (dead_sub.empty()) dead_sub = detail::dead_colors(s, base, nlo, nhi);
        if (dead_sub[std::size_t(c)]) continue;
        const int score = detail::count_set(dead_sub) + 1;
        if (score > best_dead || (score == best_dead && len > best_len)) {
          best_dead = score;
          best_len = len;
          best_x = x;
          best_c = c;
          best_lo = nlo;
          best_hi = nhi;
        }
      }
    }
    if (best_x < 0)
      throw StrategyFailure("SupplyExhausted", "phase " + std::to_string(phase_) + ": no window of C_" +
                                                   std::to_string(chain) + " takes a live color around [" +
                                                   std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    lo_ = best_lo;
    hi_ = best_hi;
    ++bob_moves_;
    // Kills credited to this move: every color dead on the new region,
    // including colors that only die because the region shrank.
    const int gained = best_dead - dead_count_;
    phase_kills_.back() += 1;
    phase_bonus_.back() += gained - 1;
    dead_count_ = best_dead;
    notes_.push_back("lemma4 phase=" + std::to_string(phase_) + " move=" + std::to_string(bob_moves_) + " I=[" +
                     std::to_string(lo_) + "," + std::to_string(hi_) + "] dead=" + std::to_string(dead_count_));
    advance_phases();
    if (dead_count_ == k_) declare_victory();
    return Move::color_point(best_x, best_c);
  }

  std::unique_ptr<Agent> clone() const override { return std::make_unique<BobLemma4Agent>(*this); }
  std::string name() const override { return "lemma4"; }
  std::vector<std::string> take_annotations() override { return std::exchange(notes_, {}); }

  bool victory() const { return victory_; }
  /// r_1, r_2, ...: colors still alive when each phase starts (last entry is
  /// the count after the final phase).
  const std::vector<int>& residuals() const { return r_; }
  /// Colors killed by Bob's own moves per phase.
  const std::vector<int>& phase_kills() const { return phase_kills_; }
  /// Colors that died during a phase without a dedicated Bob move.
  const std::vector<int>& phase_bonus() const { return phase_bonus_; }
  int phase() const { return phase_; }
  int region_size() const { return hi_ - lo_ + 1; }

 private:
  void absorb(const GameState& s) {
    const auto& tr = s.transcript();
    for (; seen_ < tr.size(); ++seen_) {
      const auto& r = tr[seen_];
      if (r.actor != Actor::alice || r.move.is_pass()) continue;
      const auto& role = meta_->roles[std::size_t(r.move.point)];
      if (role.kind == RoleKind::base) detail::shrink_region(lo_, hi_, role.position);
    }
  }

  void advance_phases() {
    while (phase_ < w_) {
      const int got = phase_kills_.back() + phase_bonus_.back();
      const int need = phase_ == w_ - 1 ? r_.back() : threshold(r_.back(), a_);
      if (got < need || got == 0) break;
      notes_.push_back("lemma4 phase " + std::to_string(phase_) + " done: r=" + std::to_string(r_.back()) +
                       " kills=" + std::to_string(phase_kills_.back()) + " bonus=" +
                       std::to_string(phase_bonus_.back()));
      r_.push_back(r_.back() - got);
      ++phase_;
      if (phase_ < w_) {
        phase_kills_.push_back(0);
        phase_bonus_.push_back(0);
      }
    }
  }

  void declare_victory() {
    if (victory_) return;
    victory_ = true;
    notes_.push_back("lemma4 victory: all " + std::to_string(k_) + " colors dead, |I|=" + std::to_string(region_size()));
  }

  std::shared_ptr<const ConstructionMeta> meta_;
  int a_, k_, w_ = 0;
  int lo_ = 0, hi_ = -1;
  int phase_ = 1;
  int dead_count_ = 0;
  std::vector<int> r_, phase_kills_, phase_bonus_;
  int bob_moves_ = 0;
  bool victory_ = false;
  std::size_t seen_ = 0;
  std::vector<std::string> notes_;
};

/// Chooses points in a fixed order (Grundy variant); the worst-case
/// first-fit order of a poset realises its Grundy number.
class OrderAgent : public Agent {
 public:
  explicit OrderAgent(std::vector<int> order) : order_(std::move(order)) {}
  Move next_move(const GameState& s) override {
    for (int x : order_)
      if (s.is_free(x)) return s.config().variant == Variant::marking ? Move::mark_point(x) : Move::choose_point(x);
    return detail::first_legal(s);
  }
  std::unique_ptr<Agent> clone() const override { return std::make_unique<OrderAgent>(*this); }
  std::string name() const override { return "order"; }

 private:
  std::vector<int> order_;
};

/// Bob lifting an auxiliary-game strategy for Q to the real (a,b) game on
/// stacked copies of Q. Each real Bob move advances one alive copy, fewest
/// embedded moves first; Alice's real moves are replayed in their copy as
/// auxiliary-Alice replies, and a copy dies once she exceeds floor(a/b)
/// replies there or touches it before Bob opened it.
class BobLiftAgent : public Agent {
 public:
  using Factory = std::function<std::unique_ptr<Agent>()>;
  using WinTest = std::function<bool(const GameState&, const Agent&)>;

  struct Copy {
    GameState game;
    std::unique_ptr<Agent> bob;
    bool alive = true;
    bool started = false;
    int bob_moves = 0;
    int last_turn_moved = -1;

    Copy(GameState g, std::unique_ptr<Agent> b) : game(std::move(g)), bob(std::move(b)) {}
    Copy(const Copy& o)
        : game(o.game), bob(o.bob ? o.bob->clone() : nullptr), alive(o.alive), started(o.started),
          bob_moves(o.bob_moves), last_turn_moved(o.last_turn_moved) {}
    Copy& operator=(const Copy& o) {
      if (this != &o) {
        Copy tmp(o);
        std::swap(*this, tmp);
      }
      return *this;
    }
    Copy(Copy&&) = default;
    Copy& operator=(Copy&&) = default;
  };

  BobLiftAgent(std::shared_ptr<const ConstructionMeta> stack_meta, const GameConfig& real, Factory factory, WinTest won)
      : meta_(std::move(stack_meta)), won_(std::move(won)) {
    if (!meta_ || meta_->copies < 1 || !meta_->inner_poset) throw std::invalid_argument("BobLiftAgent: needs stack metadata");
    if (real.b < 1) throw std::invalid_argument("BobLiftAgent: Bob needs a positive quota");
    embedded_ = real;
    embedded_.a = real.a / real.b;
    embedded_.b = 1;
    embedded_.mode = Mode::auxiliary;
    for (int c = 0; c < meta_->copies; ++c) copies_.emplace_back(GameState(meta_->inner_poset, embedded_), factory());
  }

  /// Copy count that survives breadth-first interference: every sweep over
  /// the alive copies keeps at least a fraction rho = 1 - (a/b)/(floor(a/b)+1)
  /// of them, so b * ceil(rho^-T) + 1 copies outlast T embedded rounds.
  static int default_copies(int a, int b, int horizon) {
    const double q = double(a) / double(b);
    const double rho = 1.0 - q / double(a / b + 1);
    return b * int(std::ceil(std::pow(1.0 / rho, double(horizon)) - 1e-9)) + 1;
  }

  Move next_move(const GameState& s) override {
    absorb(s);
    if (victory_) return detail::first_legal(s);
    const int turn_id = s.round();
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass) {
      for (int c = 0; c < int(copies_.size()); ++c) {
        auto& cp = copies_[std::size_t(c)];
        if (!cp.alive || cp.game.over()) continue;
        if (pass == 0 && cp.last_turn_moved == turn_id) continue;
        if (pick < 0 || cp.bob_moves < copies_[std::size_t(pick)].bob_moves) pick = c;
      }
    }
    if (pick < 0) throw StrategyFailure("AllCopiesInvalidated", "no alive copy left to play in");
    auto& cp = copies_[std::size_t(pick)];
    if (cp.game.turn() == Actor::alice) cp.game.apply(Actor::alice, Move::pass());
    if (cp.game.turn() != Actor::bob) throw StrategyFailure("InvariantViolated", "embedded game not on Bob's turn");
    Move em = cp.bob->next_move(cp.game);
    cp.game.apply(Actor::bob, em);
    cp.started = true;
    ++cp.bob_moves;
    cp.last_turn_moved = turn_id;
    Move real = em;
    real.point = meta_->global_id(pick, em.point);
    if (auto why = s.why_illegal(Actor::bob, real); !why.empty())
      throw StrategyFailure("TranslationIllegal", "lifted move " + real.str() + " rejected: " + why);
    if (won_(cp.game, *cp.bob)) {
      victory_ = true;
      winning_copy_ = pick;
      notes_.push_back("lift victory in copy " + std::to_string(pick) + " after " + std::to_string(cp.bob_moves) +
                       " embedded moves");
    }
    return real;
  }

  std::unique_ptr<Agent> clone() const override { return std::make_unique<BobLiftAgent>(*this); }
  std::string name() const override { return "lift:" + (copies_.empty() ? std::string("?") : copies_[0].bob->name()); }
  std::vector<std::string> take_annotations() override { return std::exchange(notes_, {}); }

  bool victory() const { return victory_; }
  int winning_copy() const { return winning_copy_; }
  const std::vector<Copy>& copies() const { return copies_; }
  const GameConfig& embedded_config() const { return embedded_; }
  int alive_count() const {
    int n = 0;
    for (const auto& c : copies_) n += c.alive ? 1 : 0;
    return n;
  }

 private:
  void absorb(const GameState& s) {
    const auto& tr = s.transcript();
    for (; seen_ < tr.size(); ++seen_) {
      const auto& r = tr[seen_];
      if (r.actor != Actor::alice || r.move.is_pass()) continue;
      const int c = r.move.point / meta_->copy_size;
      auto& cp = copies_[std::size_t(c)];
      if (!cp.alive) continue;
      Move em = r.move;
      em.point = r.move.point % meta_->copy_size;
      const bool ok = cp.started && !cp.game.over() && cp.game.turn() == Actor::alice && cp.game.quota_left() > 0 &&
                      cp.game.why_illegal(Actor::alice, em).empty();
      if (!ok) {
        cp.alive = false;
        notes_.push_back("copy " + std::to_string(c) + " invalidated");
        continue;
      }
      cp.game.apply(Actor::alice, em);
    }
  }

  std::shared_ptr<const ConstructionMeta> meta_;
  GameConfig embedded_;
  WinTest won_;
  std::vector<Copy> copies_;
  bool victory_ = false;
  int winning_copy_ = -1;
  std::size_t seen_ = 0;
  std::vector<std::string> notes_;
};

/// Alice in the (2,1) coloring game with w * 2^{w-1} colors. She fixes a
/// partition into w chains, gives chain i its own palette of 2^{w-1} colors,
/// and runs one w-game per chain with the recursive Painter:
///   Bob colors x in C_j with a color of palette j  -> scenario 1 on game j;
///   Bob colors x in C_j with a color of palette i  -> delete on game j, and
///                                                     present I_i(x) on game i.
/// Painter's colorings become Alice's moves; idle turns ask Painter to
/// color the lowest free point of the chain with the most free points.
class AliceT5Agent : public Agent {
 public:
  AliceT5Agent(const Poset& p, int w, bool strict_checks = true) : w_(w), strict_(strict_checks) {
    auto part = min_chain_partition(p);
    if (int(part.size()) > w) throw std::invalid_argument("AliceT5Agent: poset is wider than w");
    chains_ = part.chains;
    while (int(chains_.size()) < w) chains_.emplace_back();
    palette_ = 1 << (w - 1);
    const int n = int(p.size());
    chain_of_.assign(std::size_t(n), -1);
    pos_of_.assign(std::size_t(n), -1);
    for (int i = 0; i < w; ++i)
      for (int q = 0; q < int(chains_[std::size_t(i)].size()); ++q) {
        chain_of_[std::size_t(chains_[std::size_t(i)][std::size_t(q)])] = i;
        pos_of_[std::size_t(chains_[std::size_t(i)][std::size_t(q)])] = q;
      }
    intervals_.assign(std::size_t(n), std::vector<ChainInterval>(std::size_t(w)));
    for (int i = 0; i < w; ++i) {
      std::vector<ChainInterval> family;
      for (int x = 0; x < n; ++x) {
        if (chain_of_[std::size_t(x)] == i) continue;
        auto iv = incomparability_interval(p, chains_[std::size_t(i)], x, i);
        iv.chain = 0;
        intervals_[std::size_t(x)][std::size_t(i)] = iv;
        if (!iv.empty() && std::find(family.begin(), family.end(), iv) == family.end()) family.push_back(iv);
      }
      if (nested_depth(family) > w - 1)
        throw StrategyFailure("InvariantViolated", "interval family of chain " + std::to_string(i) + " nests too deep");
      const int len = int(chains_[std::size_t(i)].size());
      games_.emplace_back(len, palette_, family);
      painters_.emplace_back(w, len);
    }
  }

  static int palette_size(int w) { return w * (1 << (w - 1)); }

  Move next_move(const GameState& s) override {
    if (s.config().k < w_ * palette_) throw std::invalid_argument("AliceT5Agent: palette smaller than w*2^(w-1)");
    absorb(s);
    if (strict_) check_equivalence(s);
    if (buffer_.empty()) idle_ask();
    if (buffer_.empty()) return detail::first_legal(s);
    Move m = buffer_.front();
    buffer_.pop_front();
    if (!s.color_legal(m.point, m.color))
      throw StrategyFailure("TranslationIllegal", "painter color " + m.str() + " is illegal in the real game");
    return m;
  }

  std::unique_ptr<Agent> clone() const override { return std::make_unique<AliceT5Agent>(*this); }
  std::string name() const override { return "t5"; }
  std::vector<std::string> take_annotations() override { return std::exchange(notes_, {}); }

  const std::vector<std::vector<int>>& chains() const { return chains_; }
  const WGameState& wgame(int i) const { return games_[std::size_t(i)]; }
  const Painter& painter(int i) const { return painters_[std::size_t(i)]; }
  long surplus_events() const { return surplus_; }
  long idle_asks() const { return idle_; }

 private:
  int chain_offset(int i) const { return i * palette_; }

  void absorb(const GameState& s) {
    const auto& tr = s.transcript();
    if (!buffer_.empty() && seen_ < tr.size()) {
      for (std::size_t t = seen_; t < tr.size(); ++t)
        if (tr[t].actor == Actor::bob) {
          ++surplus_;
          notes_.push_back("t5 surplus painter moves carried over: " + std::to_string(buffer_.size()));
          break;
        }
    }
    for (; seen_ < tr.size(); ++seen_) {
      const auto& r = tr[seen_];
      if (r.actor != Actor::bob || r.move.is_pass()) continue;
      translate(r.move.point, r.move.color);
    }
  }

  void translate(int x, int gamma) {
    const int j = chain_of_[std::size_t(x)];
    const int i = (gamma - 1) / palette_;
    const int local = (gamma - 1) % palette_ + 1;
    const int px = pos_of_[std::size_t(x)];
    try {
      if (i == j) {
        games_[std::size_t(j)].assign(px, local);
        painters_[std::size_t(j)].observe_assign(games_[std::size_t(j)], px, local);
        return;
      }
      games_[std::size_t(j)].assign(px, kDelete);
      painters_[std::size_t(j)].observe_assign(games_[std::size_t(j)], px, kDelete);
      if (i >= w_) return;  // colors beyond the w palettes are not simulated
      const ChainInterval& iv = intervals_[std::size_t(x)][std::size_t(i)];
      if (iv.empty()) return;
      auto& g = games_[std::size_t(i)];
      std::size_t idx = g.present(iv, local);
      for (auto [q, c] : painters_[std::size_t(i)].answer_present(g, idx)) {
        g.assign(q, c);
        buffer_.push_back(Move::color_point(chains_[std::size_t(i)][std::size_t(q)], chain_offset(i) + c));
      }
    } catch (const IllegalPresent& e) {
      throw StrategyFailure("TranslationIllegal", std::string("present: ") + e.what());
    } catch (const IllegalAssign& e) {
      throw StrategyFailure("TranslationIllegal", std::string("assign: ") + e.what());
    }
  }

  void idle_ask() {
    int best = -1;
    for (int i = 0; i < w_; ++i)
      if (games_[std::size_t(i)].uncolored_count() > 0 &&
          (best < 0 || games_[std::size_t(i)].uncolored_count() > games_[std::size_t(best)].uncolored_count()))
        best = i;
    if (best < 0) return;
    auto& g = games_[std::size_t(best)];
    int q = 0;
    while (!g.uncolored(q)) ++q;
    int c = painters_[std::size_t(best)].answer_ask(g, q);
    g.assign(q, c);
    ++idle_;
    buffer_.push_back(Move::color_point(chains_[std::size_t(best)][std::size_t(q)], chain_offset(best) + c));
  }

  /// w-game availability and real legality agree on every point that is
  /// free in both.
  void check_equivalence(const GameState& s) const {
    for (int i = 0; i < w_; ++i) {
      const auto& g = games_[std::size_t(i)];
      for (int q = 0; q < g.length(); ++q) {
        if (!g.uncolored(q)) continue;
        const int x = chains_[std::size_t(i)][std::size_t(q)];
        if (!s.is_free(x)) throw StrategyFailure("InvariantViolated", "w-game and real game disagree on free points");
        for (int c = 1; c <= palette_; ++c)
          if (g.available(q, c) != s.color_legal(x, chain_offset(i) + c))
            throw StrategyFailure("InvariantViolated", "availability and legality differ at point " + std::to_string(x) +
                                                           " color " + std::to_string(chain_offset(i) + c));
      }
    }
  }

  int w_;
  bool strict_;
  int palette_ = 1;
  std::vector<std::vector<int>> chains_;
  std::vector<int> chain_of_, pos_of_;
  std::vector<std::vector<ChainInterval>> intervals_;
  std::vector<WGameState> games_;
  std::vector<Painter> painters_;
  std::deque<Move> buffer_;
  std::size_t seen_ = 0;
  long surplus_ = 0;
  long idle_ = 0;
  std::vector<std::string> notes_;
};

}  // namespace pogame

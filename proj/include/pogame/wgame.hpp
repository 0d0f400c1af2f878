#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pogame/poset.hpp"

namespace pogame {

/// The special color that no interval may forbid.
inline constexpr int kDelete = -1;

class IllegalPresent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IllegalAssign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class StrategyStuck : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Length of the longest sequence I_1 < I_2 < ... under strict nesting.
inline int nested_depth(const std::vector<ChainInterval>& family) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!family[i].empty()) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return family[x].size() < family[y].size(); });
  std::vector<int> depth(idx.size(), 1);
  int best = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (strictly_nested(family[idx[b]], family[idx[a]])) depth[a] = std::max(depth[a], depth[b] + 1);
    best = std::max(best, depth[a]);
  }
  return best;
}

struct PresentedInterval {
  ChainInterval interval;
  int forbidden = 0;
};

/// Chain of m positions, presented intervals with forbidden colors, and a
/// color per position from {1..palette} or kDelete (0 = uncolored).
class WGameState {
 public:
  WGameState(int m, int palette, std::optional<std::vector<ChainInterval>> family = std::nullopt)
      : m_(m), palette_(palette), color_(std::size_t(m), 0), forbid_(std::size_t(m) * std::size_t(palette + 1), 0),
        family_(std::move(family)) {
    if (m < 0 || palette < 1) throw std::invalid_argument("WGameState: need m >= 0 and a nonempty palette");
    uncolored_ = m;
  }

  int length() const { return m_; }
  int palette() const { return palette_; }
  int color(int x) const { return color_[std::size_t(x)]; }
  bool uncolored(int x) const { return color_[std::size_t(x)] == 0; }
  int uncolored_count() const { return uncolored_; }
  bool finished() const { return uncolored_ == 0; }
  const std::vector<PresentedInterval>& presented() const { return presented_; }
  const std::optional<std::vector<ChainInterval>>& family() const { return family_; }

  bool forbidden_at(int x, int c) const {
    return c != kDelete && forbid_[std::size_t(x) * std::size_t(palette_ + 1) + std::size_t(c)] > 0;
  }
  bool available(int x, int c) const {
    if (c == kDelete) return true;
    return c >= 1 && c <= palette_ && !forbidden_at(x, c);
  }
  /// Palette colors not forbidden at x, then kDelete.
  std::vector<int> available_colors(int x) const {
    std::vector<int> out;
    for (int c = 1; c <= palette_; ++c)
      if (!forbidden_at(x, c)) out.push_back(c);
    out.push_back(kDelete);
    return out;
  }
  bool has_palette_color(int x) const {
    for (int c = 1; c <= palette_; ++c)
      if (!forbidden_at(x, c)) return true;
    return false;
  }

  void assign(int x, int c) {
    if (x < 0 || x >= m_) throw IllegalAssign("position out of range");
    if (!uncolored(x)) throw IllegalAssign("position " + std::to_string(x) + " already colored");
    if (!available(x, c)) throw IllegalAssign("color " + std::to_string(c) + " not available at " + std::to_string(x));
    color_[std::size_t(x)] = c;
    --uncolored_;
  }

  /// Reason the presentation would be illegal, or empty.
  std::string why_not_presentable(const ChainInterval& iv, int f) const {
    if (iv.empty() || iv.lo < 0 || iv.hi >= m_) return "interval out of range";
    if (f < 1 || f > palette_) return "forbidden color outside palette";
    if (family_ && std::find(family_->begin(), family_->end(), iv) == family_->end()) return "interval not in family";
    for (int x = iv.lo; x <= iv.hi; ++x)
      if (color_[std::size_t(x)] == f) return "forbidden color already used inside interval";
    return "";
  }

  std::size_t present(const ChainInterval& iv, int f) {
    if (auto why = why_not_presentable(iv, f); !why.empty()) throw IllegalPresent(why);
    for (int x = iv.lo; x <= iv.hi; ++x) ++forbid_[std::size_t(x) * std::size_t(palette_ + 1) + std::size_t(f)];
    presented_.push_back({iv, f});
    return presented_.size() - 1;
  }

 private:
  int m_;
  int palette_;
  std::vector<int> color_;
  std::vector<std::uint16_t> forbid_;
  std::vector<PresentedInterval> presented_;
  std::optional<std::vector<ChainInterval>> family_;
  int uncolored_ = 0;
};

inline std::vector<int> available_colors(const WGameState& s, int x) { return s.available_colors(x); }

/// Painter side of a w-game. `observe_assign` is told about Presenter's
/// scenario-1 colorings after they are applied; the answer functions return
/// colorings that the caller applies.
class PainterAgent {
 public:
  virtual ~PainterAgent() = default;
  virtual void observe_assign(const WGameState& real, int x, int c) = 0;
  virtual std::vector<std::pair<int, int>> answer_present(const WGameState& real, std::size_t idx) = 0;
  virtual int answer_ask(const WGameState& real, int x) = 0;
};

/// Painter's recursive strategy with 2^{w-1} colors. Colors are read as
/// pairs (i, j) with i = ceil(c/2) and j = c mod 2; an embedded
/// (w-1)-game over colors 1..2^{w-2} handles intervals that cannot be sealed.
///
/// Maintained invariant, for every unpassed presented J with f(J) = (i, j):
/// each uncolored point of J that is not already i-forbidden in the embedded
/// game lies strictly between two (i, *)-colored points of J. With it, a
/// point forbidden both (i, 0) and (i, 1) is always i-forbidden one level
/// down, so the embedded painter's color lifts to an available one.
class Painter : public PainterAgent {
 public:
  Painter(int w, int m) : w_(w), m_(m) {
    if (w < 1) throw std::invalid_argument("Painter: need w >= 1");
    if (w >= 2) {
      sim_ = std::make_unique<WGameState>(m, 1 << (w - 2));
      inner_ = std::make_unique<Painter>(w - 1, m);
    }
  }
  Painter(const Painter& o)
      : w_(o.w_), m_(o.m_), passed_(o.passed_), passes_(o.passes_), seals_(o.seals_), fallbacks_(o.fallbacks_) {
    if (o.sim_) sim_ = std::make_unique<WGameState>(*o.sim_);
    if (o.inner_) inner_ = std::make_unique<Painter>(*o.inner_);
  }
  Painter& operator=(const Painter& o) {
    if (this != &o) {
      Painter tmp(o);
      std::swap(*this, tmp);
    }
    return *this;
  }
  Painter(Painter&&) noexcept = default;
  Painter& operator=(Painter&&) noexcept = default;

  int depth() const { return w_; }
  int palette() const { return 1 << (w_ - 1); }
  static int pair_index(int c) { return (c + 1) / 2; }
  static int pair_side(int c) { return c % 2; }
  static int encode(int i, int j) { return j == 1 ? 2 * i - 1 : 2 * i; }

  const WGameState* embedded() const { return sim_.get(); }
  const Painter* inner() const { return inner_.get(); }

  /// Telemetry: intervals handed down, seal colorings made, and how often the
  /// extremal sealing rule had to fall back to subset search.
  long passes() const { return passes_ + (inner_ ? inner_->passes() : 0); }
  long seals() const { return seals_ + (inner_ ? inner_->seals() : 0); }
  long fallbacks() const { return fallbacks_ + (inner_ ? inner_->fallbacks() : 0); }

  void observe_assign(const WGameState& real, int x, int c) override {
    (void)real;
    if (w_ == 1) return;
    int sc = c == kDelete ? kDelete : pair_index(c);
    sim_->assign(x, sc);
    inner_->observe_assign(*sim_, x, sc);
  }

  std::vector<std::pair<int, int>> answer_present(const WGameState& real, std::size_t idx) override {
    passed_.resize(real.presented().size(), 0);
    if (w_ == 1) return {};  // the family is empty when w = 1
    const auto& pj = real.presented()[idx];
    const ChainInterval& J = pj.interval;
    const int i = pair_index(pj.forbidden);
    const int j = pair_side(pj.forbidden);

    bool pass = false;
    for (std::size_t e = 0; e < idx && !pass; ++e) {
      const auto& pe = real.presented()[e];
      if (pe.forbidden == encode(i, 1 - j) && strictly_nested(J, pe.interval)) pass = true;
    }

    std::vector<std::pair<int, int>> out;
    if (pass) {
      passed_[idx] = 1;
      ++passes_;
      std::size_t sidx = sim_->present(J, i);
      auto sim_moves = inner_->answer_present(*sim_, sidx);
      for (auto [x, si] : sim_moves) {
        sim_->assign(x, si);
        out.emplace_back(x, lift(real, x, si));
      }
      return out;
    }

    const int seal_color = encode(i, 1 - j);
    std::vector<int> seal_points = extremal_seals(real, J, i);
    bool ok = true;
    for (int x : seal_points)
      if (!real.available(x, seal_color)) ok = false;
    if (ok) ok = seal_restores(real, idx, seal_points, seal_color);
    if (!ok) {
      ++fallbacks_;
      auto found = search_seals(real, idx, seal_color);
      if (!found) throw StrategyStuck("no selection of at most two points seals interval [" + std::to_string(J.lo) + "," +
                                      std::to_string(J.hi) + "]");
      seal_points = *found;
    }
    for (int x : seal_points) {
      ++seals_;
      out.emplace_back(x, seal_color);
      sim_->assign(x, kDelete);
      inner_->observe_assign(*sim_, x, kDelete);
    }
    return out;
  }

  int answer_ask(const WGameState& real, int x) override {
    if (w_ == 1) {
      if (!real.available(x, 1)) throw StrategyStuck("single color forbidden at asked point " + std::to_string(x));
      return 1;
    }
    int si = inner_->answer_ask(*sim_, x);
    sim_->assign(x, si);
    return lift(real, x, si);
  }

  /// Direct check of the sealing invariant, the lifting property, and the
  /// nesting bound of the embedded family, recursively. Returns an empty
  /// string when everything holds.
  std::string check_invariant(const WGameState& real) const {
    if (w_ == 1) return "";
    for (std::size_t e = 0; e < real.presented().size(); ++e) {
      if (e < passed_.size() && passed_[e]) continue;
      const auto& pe = real.presented()[e];
      const int i = pair_index(pe.forbidden);
      for (int x = pe.interval.lo; x <= pe.interval.hi; ++x) {
        if (!real.uncolored(x) || sim_->forbidden_at(x, i)) continue;
        if (!bracketed(real, pe.interval, i, x))
          return "w=" + std::to_string(w_) + ": uncolored point " + std::to_string(x) + " of presented interval #" +
                 std::to_string(e) + " is not sealed for pair " + std::to_string(i);
      }
    }
    for (int x = 0; x < m_; ++x) {
      if (!real.uncolored(x)) continue;
      for (int i = 1; i <= palette() / 2; ++i)
        if (real.forbidden_at(x, encode(i, 0)) && real.forbidden_at(x, encode(i, 1)) && !sim_->forbidden_at(x, i))
          return "w=" + std::to_string(w_) + ": point " + std::to_string(x) + " lost both colors of pair " +
                 std::to_string(i) + " without being passed down";
    }
    std::vector<ChainInterval> passed_family;
    for (const auto& p : sim_->presented()) passed_family.push_back(p.interval);
    if (nested_depth(passed_family) > w_ - 2)
      return "w=" + std::to_string(w_) + ": embedded family nests deeper than " + std::to_string(w_ - 2);
    return inner_->check_invariant(*sim_);
  }

 private:
  bool is_pair(const WGameState& real, int q, int i) const {
    int c = real.color(q);
    return c > 0 && pair_index(c) == i;
  }

  bool bracketed(const WGameState& real, const ChainInterval& J, int i, int x) const {
    bool below = false, above = false;
    for (int q = J.lo; q < x && !below; ++q) below = is_pair(real, q, i);
    for (int q = x + 1; q <= J.hi && !above; ++q) above = is_pair(real, q, i);
    return below && above;
  }

  int lift(const WGameState& real, int x, int si) const {
    if (real.available(x, encode(si, 1))) return encode(si, 1);
    if (real.available(x, encode(si, 0))) return encode(si, 0);
    throw StrategyStuck("embedded color " + std::to_string(si) + " has no available lift at point " + std::to_string(x));
  }

  /// Lowest and highest uncolored, not i-forbidden points of J that lack an
  /// (i, *) point of J beyond them.
  std::vector<int> extremal_seals(const WGameState& real, const ChainInterval& J, int i) const {
    std::vector<int> open;
    for (int x = J.lo; x <= J.hi; ++x)
      if (real.uncolored(x) && !sim_->forbidden_at(x, i)) open.push_back(x);
    std::vector<int> out;
    if (open.empty()) return out;
    bool below = false, above = false;
    for (int q = J.lo; q < open.front() && !below; ++q) below = is_pair(real, q, i);
    for (int q = open.back() + 1; q <= J.hi && !above; ++q) above = is_pair(real, q, i);
    if (!below) out.push_back(open.front());
    if (!above && (out.empty() || out.back() != open.back())) out.push_back(open.back());
    return out;
  }

  bool seal_restores(const WGameState& real, std::size_t idx, const std::vector<int>& points, int seal_color) const {
    WGameState trial = real;
    for (int x : points) {
      if (!trial.uncolored(x) || !trial.available(x, seal_color)) return false;
      trial.assign(x, seal_color);
    }
    const auto& pj = real.presented()[idx];
    const int i = pair_index(pj.forbidden);
    for (int x = pj.interval.lo; x <= pj.interval.hi; ++x)
      if (trial.uncolored(x) && !sim_->forbidden_at(x, i) && !bracketed(trial, pj.interval, i, x)) return false;
    return true;
  }

  std::optional<std::vector<int>> search_seals(const WGameState& real, std::size_t idx, int seal_color) const {
    const auto& J = real.presented()[idx].interval;
    std::vector<int> cand;
    for (int x = J.lo; x <= J.hi; ++x)
      if (real.uncolored(x) && real.available(x, seal_color)) cand.push_back(x);
    if (seal_restores(real, idx, {}, seal_color)) return std::vector<int>{};
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (seal_restores(real, idx, {cand[a]}, seal_color)) return std::vector<int>{cand[a]};
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (seal_restores(real, idx, {cand[a], cand[b]}, seal_color)) return std::vector<int>{cand[a], cand[b]};
    }
    return std::nullopt;
  }

  int w_;
  int m_;
  std::unique_ptr<WGameState> sim_;
  std::unique_ptr<Painter> inner_;
  std::vector<char> passed_;
  long passes_ = 0;
  long seals_ = 0;
  long fallbacks_ = 0;
};

struct PresenterAction {
  enum class Kind { assign, present, ask };
  Kind kind = Kind::ask;
  int point = -1;
  ChainInterval interval;
  int color = 0;

  std::string str() const {
    switch (kind) {
      case Kind::assign: return "assign(" + std::to_string(point) + "," + std::to_string(color) + ")";
      case Kind::present:
        return "present([" + std::to_string(interval.lo) + "," + std::to_string(interval.hi) + "]," +
               std::to_string(color) + ")";
      case Kind::ask: return "ask(" + std::to_string(point) + ")";
    }
    return "?";
  }
};

class Presenter {
 public:
  virtual ~Presenter() = default;
  virtual PresenterAction next(const WGameState& state) = 0;
};

/// Applies a Presenter action to the state and obtains Painter's reply.
/// Returns false when Presenter wins on this action (scenario 3 with no
/// available color); throws IllegalPresent/IllegalAssign on bad actions and
/// std::logic_error when Painter answers illegally.
inline bool presenter_action(WGameState& state, const PresenterAction& act, PainterAgent& painter) {
  switch (act.kind) {
    case PresenterAction::Kind::assign:
      state.assign(act.point, act.color);
      painter.observe_assign(state, act.point, act.color);
      return true;
    case PresenterAction::Kind::present: {
      std::size_t idx = state.present(act.interval, act.color);
      auto replies = painter.answer_present(state, idx);
      if (replies.size() > 2) throw std::logic_error("painter colored more than two points");
      for (auto [x, c] : replies) {
        if (!act.interval.contains(x) || c == kDelete) throw std::logic_error("painter reply outside rules");
        state.assign(x, c);
      }
      return true;
    }
    case PresenterAction::Kind::ask: {
      if (!state.uncolored(act.point)) throw IllegalAssign("asked point already colored");
      if (!state.has_palette_color(act.point)) return false;
      int c = painter.answer_ask(state, act.point);
      if (c == kDelete) throw std::logic_error("painter answered scenario 3 with the delete color");
      state.assign(act.point, c);
      return true;
    }
  }
  return true;
}

/// Random family of intervals on m positions with nested_depth <= max_depth.
inline std::vector<ChainInterval> random_family(int m, int max_depth, std::uint64_t seed, int target_size = -1) {
  std::mt19937_64 rng(seed);
  if (target_size < 0) target_size = std::max(1, m);
  std::vector<ChainInterval> fam;
  if (m == 0 || max_depth <= 0) return fam;
  for (int tries = 0; tries < target_size * 8 && int(fam.size()) < target_size; ++tries) {
    ChainInterval iv;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0 && !fam.empty()) {
      // Grow around an existing interval to encourage deep nesting.
      const auto& base = fam[std::uniform_int_distribution<std::size_t>(0, fam.size() - 1)(rng)];
      int lo = base.lo - std::uniform_int_distribution<int>(0, 3)(rng);
      int hi = base.hi + std::uniform_int_distribution<int>(0, 3)(rng);
      iv = {0, std::max(0, lo), std::min(m - 1, hi)};
    } else {
      int lo = std::uniform_int_distribution<int>(0, m - 1)(rng);
      int len = std::uniform_int_distribution<int>(1, m)(rng);
      iv = {0, lo, std::min(m - 1, lo + len - 1)};
    }
    if (std::find(fam.begin(), fam.end(), iv) != fam.end()) continue;
    fam.push_back(iv);
    if (nested_depth(fam) > max_depth) fam.pop_back();
  }
  return fam;
}

struct PresenterMix {
  double assign = 1.0;
  double present = 2.0;
  double ask = 1.0;
};

/// Random legal Presenter. With `aggressive`, asks prefer the point with the
/// fewest available colors and forbidden colors prefer colors still
/// available at many uncolored points of the interval.
class PresenterFuzzer : public Presenter {
 public:
  PresenterFuzzer(std::uint64_t seed, PresenterMix mix, std::vector<ChainInterval> family, bool aggressive = false)
      : rng_(seed), mix_(mix), family_(std::move(family)), aggressive_(aggressive) {}

  PresenterAction next(const WGameState& s) override {
    std::vector<int> free;
    for (int x = 0; x < s.length(); ++x)
      if (s.uncolored(x)) free.push_back(x);
    if (free.empty()) throw std::logic_error("PresenterFuzzer: game already over");
    const double progress = 1.0 - double(free.size()) / double(std::max(1, s.length()));
    double w_ask = mix_.ask * (1.0 + 4.0 * progress);
    if (mix_.ask == 0.0) w_ask = 0.0;
    std::vector<std::pair<ChainInterval, int>> presentable;
    for (const auto& iv : family_) {
      bool has_free = false;
      for (int x = iv.lo; x <= iv.hi && !has_free; ++x) has_free = s.uncolored(x);
      if (!has_free) continue;
      for (int f = 1; f <= s.palette(); ++f)
        if (s.why_not_presentable(iv, f).empty()) presentable.emplace_back(iv, f);
    }
    double w_present = presentable.empty() ? 0.0 : mix_.present;
    double w_assign = mix_.assign;
    if (w_ask + w_present + w_assign <= 0.0) w_ask = 1.0;
    std::discrete_distribution<int> pick({w_assign, w_present, w_ask});
    switch (pick(rng_)) {
      case 0: {
        int x = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng_)];
        auto colors = s.available_colors(x);
        int c = colors[std::uniform_int_distribution<std::size_t>(0, colors.size() - 1)(rng_)];
        return {PresenterAction::Kind::assign, x, {}, c};
      }
      case 1: {
        if (aggressive_ && coin()) {
          // Forbid the color that is still open at the most uncolored points.
          std::size_t best = 0;
          int best_score = -1;
          for (std::size_t e = 0; e < presentable.size(); ++e) {
            const auto& [iv, f] = presentable[e];
            int score = 0;
            for (int x = iv.lo; x <= iv.hi; ++x)
              if (s.uncolored(x) && s.available(x, f)) ++score;
            if (score > best_score) {
              best_score = score;
              best = e;
            }
          }
          return {PresenterAction::Kind::present, -1, presentable[best].first, presentable[best].second};
        }
        auto& [iv, f] = presentable[std::uniform_int_distribution<std::size_t>(0, presentable.size() - 1)(rng_)];
        return {PresenterAction::Kind::present, -1, iv, f};
      }
      default: {
        int x = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng_)];
        if (aggressive_ && coin()) {
          int best = -1;
          for (int y : free) {
            int cnt = int(s.available_colors(y).size());
            if (best < 0 || cnt < best) {
              best = cnt;
              x = y;
            }
          }
        }
        return {PresenterAction::Kind::ask, x, {}, 0};
      }
    }
  }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::mt19937_64 rng_;
  PresenterMix mix_;
  std::vector<ChainInterval> family_;
  bool aggressive_;
};

struct WGameResult {
  bool painter_won = false;
  bool violation = false;
  std::string failure;
  int rounds = 0;
  std::vector<PresenterAction> script;
  long fallbacks = 0;
  long passes = 0;
  long seals = 0;
};

/// Plays one w-game to completion, checking the painter invariant after
/// every round when `check` is set.
inline WGameResult run_wgame(int m, int w, const std::vector<ChainInterval>& family, Presenter& presenter,
                             bool check = true) {
  WGameState s(m, 1 << (w - 1), family);
  Painter painter(w, m);
  WGameResult r;
  try {
    while (!s.finished()) {
      PresenterAction act = presenter.next(s);
      r.script.push_back(act);
      ++r.rounds;
      if (!presenter_action(s, act, painter)) {
        r.failure = "presenter won: no color available at asked point " + std::to_string(act.point);
        break;
      }
      if (check) {
        if (auto why = painter.check_invariant(s); !why.empty()) {
          r.violation = true;
          r.failure = why;
          break;
        }
      }
    }
  } catch (const StrategyStuck& e) {
    r.violation = true;
    r.failure = std::string("StrategyStuck: ") + e.what();
  }
  r.painter_won = s.finished() && !r.violation;
  r.fallbacks = painter.fallbacks();
  r.passes = painter.passes();
  r.seals = painter.seals();
  return r;
}

/// Scripted Presenter replaying a fixed action list.
class ScriptedPresenter : public Presenter {
 public:
  explicit ScriptedPresenter(std::vector<PresenterAction> script) : script_(std::move(script)) {}
  PresenterAction next(const WGameState&) override {
    if (pos_ >= script_.size()) throw std::logic_error("ScriptedPresenter: script exhausted");
    return script_[pos_++];
  }

 private:
  std::vector<PresenterAction> script_;
  std::size_t pos_ = 0;
};

}  // namespace pogame

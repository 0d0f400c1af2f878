#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pogame {

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContiguityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Contiguous run of positions [lo, hi] inside a chain. An empty interval
/// keeps its gap: `lo` is the number of chain points below the owner and
/// `hi == lo - 1`.
struct ChainInterval {
  int chain = 0;
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int pos) const { return lo <= pos && pos <= hi; }
  bool operator==(const ChainInterval&) const = default;
};

/// Strict nesting: `inner` is a proper subset of `outer` and avoids both of
/// its endpoints.
inline bool strictly_nested(const ChainInterval& inner, const ChainInterval& outer) {
  if (inner.empty() || outer.empty()) return false;
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

struct ChainPartition {
  std::vector<std::vector<int>> chains;
  std::size_t size() const { return chains.size(); }
};

/// Finite strict partial order over points 0..n-1. The relation is stored
/// transitively closed as a dense bit matrix; incomparability lists are
/// cached on construction. Immutable once built.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return n_; }

  bool less(int x, int y) const {
    return (below_[static_cast<std::size_t>(x) * words_ + (static_cast<std::size_t>(y) >> 6)] >> (y & 63)) & 1U;
  }
  bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }

  const std::vector<int>& incomparables(int x) const { return inc_[static_cast<std::size_t>(x)]; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int x, std::string label) { labels_[static_cast<std::size_t>(x)] = std::move(label); }

  std::size_t comparable_pair_count() const {
    std::size_t total = 0;
    for (auto word : below_) total += static_cast<std::size_t>(std::popcount(word));
    return total;
  }

  /// Cover relation (transitive reduction), sorted.
  std::vector<std::pair<int, int>> cover_pairs() const {
    // Transposed rows: column y holds the points below y.
    std::vector<std::uint64_t> above(n_ * words_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (less(int(x), int(y))) above[y * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    std::vector<std::pair<int, int>> out;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (!less(int(x), int(y))) continue;
        bool cover = true;
        for (std::size_t w = 0; w < words_ && cover; ++w)
          if ((below_[x * words_ + w] & above[y * words_ + w]) != 0) cover = false;
        if (cover) out.emplace_back(int(x), int(y));
      }
    }
    return out;
  }

  /// FNV-1a over the closed relation.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 1099511628211ULL;
      }
    };
    mix(n_);
    for (auto word : below_) mix(word);
    return h;
  }

  bool operator==(const Poset& other) const { return n_ == other.n_ && below_ == other.below_; }

  /// Builds from an arbitrary relation and closes it. Throws PosetError on a
  /// reflexive pair or a cycle.
  static Poset close(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    Poset p(n);
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || std::size_t(a) >= n || std::size_t(b) >= n)
        throw PosetError("relation pair (" + std::to_string(a) + "," + std::to_string(b) + ") references a point >= n");
      if (a == b) throw PosetError("irreflexivity violated: reflexive pair on point " + std::to_string(a));
      p.set(a, b);
    }
    // Warshall over bit rows.
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t* row_k = &p.below_[k * p.words_];
      for (std::size_t i = 0; i < n; ++i) {
        if (!p.less(int(i), int(k))) continue;
        std::uint64_t* row_i = &p.below_[i * p.words_];
        for (std::size_t w = 0; w < p.words_; ++w) row_i[w] |= row_k[w];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (p.less(int(i), int(i)))
        throw PosetError("antisymmetry violated: cycle through point " + std::to_string(i));
    p.finish();
    return p;
  }

  /// Builds from a relation predicate that is expected to be already closed;
  /// verifies every axiom and throws PosetError otherwise.
  template <class Less>
  static Poset from_closed_relation(std::size_t n, Less&& is_less) {
    Poset p(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && is_less(int(x), int(y))) p.set(int(x), int(y));
    for (std::size_t x = 0; x < n; ++x) {
      if (p.less(int(x), int(x))) throw PosetError("irreflexivity violated at point " + std::to_string(x));
      for (std::size_t y = x + 1; y < n; ++y)
        if (p.less(int(x), int(y)) && p.less(int(y), int(x)))
          throw PosetError("antisymmetry violated: cycle between " + std::to_string(x) + " and " + std::to_string(y));
    }
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t* row_x = &p.below_[x * p.words_];
      for (std::size_t y = 0; y < n; ++y) {
        if (!p.less(int(x), int(y))) continue;
        const std::uint64_t* row_y = &p.below_[y * p.words_];
        for (std::size_t w = 0; w < p.words_; ++w)
          if ((row_y[w] & ~row_x[w]) != 0)
            throw PosetError("transitivity violated: " + std::to_string(x) + "<" + std::to_string(y) +
                             " is not closed");
      }
    }
    p.finish();
    return p;
  }

 private:
  explicit Poset(std::size_t n) : n_(n), words_((n + 63) / 64), below_(n * ((n + 63) / 64), 0), labels_(n) {}

  void set(int x, int y) {
    below_[static_cast<std::size_t>(x) * words_ + (static_cast<std::size_t>(y) >> 6)] |= std::uint64_t{1} << (y & 63);
  }

  void finish() {
    inc_.assign(n_, {});
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (x != y && !less(int(x), int(y)) && !less(int(y), int(x))) inc_[x].push_back(int(y));
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> below_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::string> labels_;
};

inline Poset validate_poset(const std::vector<std::pair<int, int>>& pairs, std::size_t n) {
  return Poset::close(n, pairs);
}

inline Poset chain_poset(std::size_t n) {
  return Poset::from_closed_relation(n, [](int x, int y) { return x < y; });
}

inline Poset antichain_poset(std::size_t n) {
  return Poset::from_closed_relation(n, [](int, int) { return false; });
}

inline std::vector<int> incomparables(const Poset& p, int x) { return p.incomparables(x); }

namespace detail {

/// Hopcroft-Karp on the split graph: left copy x -> right copy y iff x < y.
struct ComparabilityMatching {
  std::vector<int> match_left;   // x -> y or -1
  std::vector<int> match_right;  // y -> x or -1
  std::size_t size = 0;

  explicit ComparabilityMatching(const Poset& p) {
    const int n = int(p.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.less(x, y)) adj[std::size_t(x)].push_back(y);
    match_left.assign(std::size_t(n), -1);
    match_right.assign(std::size_t(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n));
    constexpr int inf = std::numeric_limits<int>::max();

    auto bfs = [&]() {
      std::queue<int> q;
      bool found = false;
      for (int x = 0; x < n; ++x) {
        if (match_left[std::size_t(x)] < 0) {
          dist[std::size_t(x)] = 0;
          q.push(x);
        } else {
          dist[std::size_t(x)] = inf;
        }
      }
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[std::size_t(x)]) {
          int nx = match_right[std::size_t(y)];
          if (nx < 0) {
            found = true;
          } else if (dist[std::size_t(nx)] == inf) {
            dist[std::size_t(nx)] = dist[std::size_t(x)] + 1;
            q.push(nx);
          }
        }
      }
      return found;
    };

    std::vector<std::size_t> it(static_cast<std::size_t>(n));
    auto dfs = [&](auto&& self, int x) -> bool {
      for (auto& i = it[std::size_t(x)]; i < adj[std::size_t(x)].size(); ++i) {
        int y = adj[std::size_t(x)][i];
        int nx = match_right[std::size_t(y)];
        if (nx < 0 || (dist[std::size_t(nx)] == dist[std::size_t(x)] + 1 && self(self, nx))) {
          match_left[std::size_t(x)] = y;
          match_right[std::size_t(y)] = x;
          return true;
        }
      }
      dist[std::size_t(x)] = inf;
      return false;
    };

    while (bfs()) {
      std::fill(it.begin(), it.end(), 0);
      for (int x = 0; x < n; ++x)
        if (match_left[std::size_t(x)] < 0 && dfs(dfs, x)) ++size;
    }
  }
};

}  // namespace detail

struct WidthResult {
  int width = 0;
  std::vector<int> antichain;  // sorted witness
};

/// Width by Dilworth: n minus a maximum matching of the comparability split
/// graph. The witness antichain comes from the Konig vertex cover.
inline WidthResult width_with_witness(const Poset& p) {
  const int n = int(p.size());
  detail::ComparabilityMatching m(p);
  // Alternating reachability from unmatched left vertices.
  std::vector<char> left_z(std::size_t(n), 0), right_z(std::size_t(n), 0);
  std::queue<int> q;
  for (int x = 0; x < n; ++x)
    if (m.match_left[std::size_t(x)] < 0) {
      left_z[std::size_t(x)] = 1;
      q.push(x);
    }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y) || right_z[std::size_t(y)]) continue;
      right_z[std::size_t(y)] = 1;
      int nx = m.match_right[std::size_t(y)];
      if (nx >= 0 && !left_z[std::size_t(nx)]) {
        left_z[std::size_t(nx)] = 1;
        q.push(nx);
      }
    }
  }
  WidthResult r;
  r.width = n - int(m.size);
  for (int x = 0; x < n; ++x)
    if (left_z[std::size_t(x)] && !right_z[std::size_t(x)]) r.antichain.push_back(x);
  return r;
}

inline int width(const Poset& p) { return width_with_witness(p).width; }

inline ChainPartition min_chain_partition(const Poset& p) {
  const int n = int(p.size());
  detail::ComparabilityMatching m(p);
  ChainPartition out;
  for (int x = 0; x < n; ++x) {
    if (m.match_right[std::size_t(x)] >= 0) continue;
    std::vector<int> chain;
    for (int cur = x; cur >= 0; cur = m.match_left[std::size_t(cur)]) chain.push_back(cur);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

/// Positions of the points of `chain` incomparable to x, as an interval.
/// `chain` must be sorted ascending in the order and must not contain x.
inline ChainInterval incomparability_interval(const Poset& p, const std::vector<int>& chain, int x, int chain_id = 0) {
  int lo = -1, hi = -1, below = 0;
  for (int pos = 0; pos < int(chain.size()); ++pos) {
    int c = chain[std::size_t(pos)];
    if (c == x) throw std::invalid_argument("incomparability_interval: point lies on the chain");
    if (p.incomparable(x, c)) {
      if (lo < 0) lo = pos;
      else if (hi != pos - 1)
        throw ContiguityViolation("incomparable set of point " + std::to_string(x) + " is not consecutive in chain " +
                                  std::to_string(chain_id));
      hi = pos;
    } else if (p.less(c, x)) {
      if (lo >= 0) throw ContiguityViolation("chain point below x after its incomparable run");
      ++below;
    }
  }
  if (lo < 0) return ChainInterval{chain_id, below, below - 1};
  return ChainInterval{chain_id, lo, hi};
}

/// Builds a poset from a base chain of length m plus side chains whose points
/// carry intervals over base positions. Endpoints along each side chain must
/// be nondecreasing. Side point x vs base position c: x > c iff c < lo(x),
/// x < c iff c > hi(x). Side points of different chains are comparable iff
/// their intervals are disjoint, an empty interval counting as a point in
/// its gap. Ids: base 0..m-1, then side chains in order.
inline Poset poset_from_side_chains(int m, const std::vector<std::vector<ChainInterval>>& sides) {
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const auto& side = sides[s];
    for (std::size_t j = 0; j < side.size(); ++j) {
      const auto& iv = side[j];
      if (iv.lo < 0 || iv.hi >= m || iv.lo > iv.hi + 1)
        throw PosetError("side chain " + std::to_string(s) + " entry " + std::to_string(j) + " is out of range");
      if (j > 0 && (iv.lo < side[j - 1].lo || iv.hi < side[j - 1].hi))
        throw PosetError("monotonicity violated in side chain " + std::to_string(s) + " at entry " +
                         std::to_string(j));
    }
  }
  // Interval order on doubled coordinates: base point c is [2c, 2c], a
  // side interval [lo, hi] is [2lo, 2hi], and an empty one sits in its gap
  // as [2lo-1, 2lo-1].
  struct Info {
    int chain;  // -1 base
    int pos;
    int left, right;
  };
  std::vector<Info> info;
  for (int c = 0; c < m; ++c) info.push_back({-1, c, 2 * c, 2 * c});
  for (std::size_t s = 0; s < sides.size(); ++s)
    for (std::size_t j = 0; j < sides[s].size(); ++j) {
      const auto& iv = sides[s][j];
      if (iv.empty()) info.push_back({int(s), int(j), 2 * iv.lo - 1, 2 * iv.lo - 1});
      else info.push_back({int(s), int(j), 2 * iv.lo, 2 * iv.hi});
    }
  return Poset::from_closed_relation(info.size(), [&](int x, int y) {
    const Info& a = info[std::size_t(x)];
    const Info& b = info[std::size_t(y)];
    if (a.chain == b.chain) return a.pos < b.pos;
    return a.right < b.left;
  });
}

/// Induced-subposet search. Returns the embedding (pattern point -> host
/// point) when one exists.
inline std::optional<std::vector<int>> find_induced(const Poset& host, const Poset& pattern) {
  const int k = int(pattern.size());
  const int n = int(host.size());
  if (k == 0) return std::vector<int>{};
  if (k > n) return std::nullopt;

  // Order pattern points: most constrained next, preferring points with many
  // already-placed incomparable neighbours (their candidates come from a
  // short incomparability list).
  std::vector<int> order;
  std::vector<char> placed(std::size_t(k), 0);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_key1 = -1, best_key2 = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[std::size_t(v)]) continue;
      int inc_placed = 0;
      for (int u : pattern.incomparables(v))
        if (placed[std::size_t(u)]) ++inc_placed;
      int key2 = int(pattern.incomparables(v).size());
      if (inc_placed > best_key1 || (inc_placed == best_key1 && key2 > best_key2)) {
        best = v;
        best_key1 = inc_placed;
        best_key2 = key2;
      }
    }
    placed[std::size_t(best)] = 1;
    order.push_back(best);
  }

  std::vector<int> below_count(std::size_t(n), 0), above_count(std::size_t(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (host.less(x, y)) {
        ++above_count[std::size_t(x)];
        ++below_count[std::size_t(y)];
      }
  std::vector<int> pat_below(std::size_t(k), 0), pat_above(std::size_t(k), 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (pattern.less(x, y)) {
        ++pat_above[std::size_t(x)];
        ++pat_below[std::size_t(y)];
      }

  std::vector<int> image(std::size_t(k), -1);
  std::vector<char> used(std::size_t(n), 0);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) all[std::size_t(x)] = x;

  auto consistent = [&](int v, int h) {
    if (used[std::size_t(h)]) return false;
    if (int(host.incomparables(h).size()) < int(pattern.incomparables(v).size())) return false;
    if (above_count[std::size_t(h)] < pat_above[std::size_t(v)]) return false;
    if (below_count[std::size_t(h)] < pat_below[std::size_t(v)]) return false;
    for (int u = 0; u < k; ++u) {
      int hu = image[std::size_t(u)];
      if (hu < 0) continue;
      if (pattern.less(u, v) != host.less(hu, h)) return false;
      if (pattern.less(v, u) != host.less(h, hu)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    int v = order[std::size_t(depth)];
    const std::vector<int>* cands = &all;
    for (int u : pattern.incomparables(v)) {
      int hu = image[std::size_t(u)];
      if (hu >= 0 && host.incomparables(hu).size() < cands->size()) cands = &host.incomparables(hu);
    }
    for (int h : *cands) {
      if (!consistent(v, h)) continue;
      image[std::size_t(v)] = h;
      used[std::size_t(h)] = 1;
      if (self(self, depth + 1)) return true;
      image[std::size_t(v)] = -1;
      used[std::size_t(h)] = 0;
    }
    return false;
  };
  if (search(search, 0)) return image;
  return std::nullopt;
}

inline bool contains_induced(const Poset& host, const Poset& pattern) {
  return find_induced(host, pattern).has_value();
}

/// Random poset of width exactly w: w chains realized through monotone
/// interval overlaps with a base chain. Regenerates until the width matches.
inline Poset random_width_poset(int w, int n, std::uint64_t seed) {
  if (w < 1 || n < w) throw std::invalid_argument("random_width_poset: need w >= 1 and n >= w");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // Split n into w positive chain sizes.
    std::vector<int> sizes(std::size_t(w), 1);
    for (int extra = n - w; extra > 0; --extra)
      ++sizes[std::uniform_int_distribution<std::size_t>(0, std::size_t(w) - 1)(rng)];
    const int m = sizes[0];
    std::vector<std::vector<ChainInterval>> sides;
    for (int s = 1; s < w; ++s) {
      std::vector<int> los, his;
      for (int j = 0; j < sizes[std::size_t(s)]; ++j) {
        int lo = std::uniform_int_distribution<int>(0, m - 1)(rng);
        int len = std::uniform_int_distribution<int>(0, m)(rng);
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) len = std::max(len, (m + 1) / 2);
        int hi = std::min(lo + len - 1, m - 1);
        los.push_back(lo);
        his.push_back(hi);
      }
      std::sort(los.begin(), los.end());
      std::sort(his.begin(), his.end());
      std::vector<ChainInterval> side;
      for (std::size_t j = 0; j < los.size(); ++j) side.push_back({s, los[j], his[j]});
      sides.push_back(std::move(side));
    }
    Poset p = poset_from_side_chains(m, sides);
    if (width(p) == w) return p;
  }
  throw std::runtime_error("random_width_poset: no width-" + std::to_string(w) + " instance after 100 attempts (n=" +
                           std::to_string(n) + ", seed=" + std::to_string(seed) + ")");
}

/// Random poset on n points: each pair i < j of a random linear extension is
/// related with probability `density`, then closed.
inline Poset random_poset(int n, double density, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_poset: negative size");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(perm[std::size_t(i)], perm[std::size_t(j)]);
  return Poset::close(std::size_t(n), pairs);
}

}  // namespace pogame

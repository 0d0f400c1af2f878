#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pogame/poset.hpp"

namespace pogame {

enum class RoleKind { base, side, copy };

struct PointRole {
  RoleKind kind = RoleKind::base;
  int chain = 0;     // 0 for the base chain C, i >= 1 for side chain C_i
  int position = 0;  // index within its chain
  ChainInterval interval;  // side points: incomparable base positions
  int copy = -1;           // stacks: which copy
  int local = -1;          // stacks: point id inside the copy
};

/// Role map and parameters of a generated poset.
struct ConstructionMeta {
  std::string kind;
  std::map<std::string, long long> params;
  std::vector<int> sizes;  // interval sizes n_1 > ... > n_{w-1} (lemma4)
  std::vector<PointRole> roles;
  std::vector<std::vector<int>> chains;  // chains[0] = base, chains[i] = side chain i, ascending

  int copies = 0;
  int copy_size = 0;
  std::shared_ptr<const Poset> inner_poset;
  std::shared_ptr<const ConstructionMeta> inner;

  /// Side points per (chain, lo, hi), ascending by duplicate index.
  std::map<std::tuple<int, int, int>, std::vector<int>> by_interval;

  int base_length() const { return chains.empty() ? 0 : int(chains[0].size()); }

  const std::vector<int>& duplicates(int chain, const ChainInterval& iv) const {
    static const std::vector<int> none;
    auto it = by_interval.find({chain, iv.lo, iv.hi});
    return it == by_interval.end() ? none : it->second;
  }

  int global_id(int copy, int local) const { return copy * copy_size + local; }
};

struct Construction {
  Poset poset;
  ConstructionMeta meta;
};

struct MonotoneChainSpec {
  std::vector<std::pair<ChainInterval, int>> entries;  // (interval, multiplicity)
};

inline Construction monotone_chain_poset(int m, const std::vector<MonotoneChainSpec>& specs) {
  if (m < 1) throw std::invalid_argument("monotone_chain_poset: base chain must be nonempty");
  std::vector<std::vector<ChainInterval>> sides;
  Construction out;
  out.meta.kind = "monotone";
  out.meta.params["m"] = m;
  out.meta.chains.emplace_back();
  for (int c = 0; c < m; ++c) {
    out.meta.roles.push_back({RoleKind::base, 0, c, {}, -1, -1});
    out.meta.chains[0].push_back(c);
  }
  int next_id = m;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const int chain = int(s) + 1;
    std::vector<ChainInterval> side;
    out.meta.chains.emplace_back();
    for (std::size_t e = 0; e < specs[s].entries.size(); ++e) {
      auto [iv, mult] = specs[s].entries[e];
      if (e > 0) {
        const auto& prev = specs[s].entries[e - 1].first;
        if (iv.lo < prev.lo || iv.hi < prev.hi)
          throw PosetError("monotone_chain_poset: endpoints decrease in spec " + std::to_string(s) + " at entry " +
                           std::to_string(e));
      }
      iv.chain = 0;
      for (int d = 0; d < mult; ++d) {
        int id = next_id++;
        side.push_back({chain, iv.lo, iv.hi});
        out.meta.roles.push_back({RoleKind::side, chain, int(side.size()) - 1, iv, -1, -1});
        out.meta.chains[std::size_t(chain)].push_back(id);
        out.meta.by_interval[{chain, iv.lo, iv.hi}].push_back(id);
      }
    }
    sides.push_back(std::move(side));
  }
  out.poset = poset_from_side_chains(m, sides);
  for (std::size_t id = 0; id < out.meta.roles.size(); ++id) {
    const auto& r = out.meta.roles[id];
    if (r.kind == RoleKind::base)
      out.poset.set_label(int(id), "C[" + std::to_string(r.position) + "]");
    else
      out.poset.set_label(int(id), "C" + std::to_string(r.chain) + "[" + std::to_string(r.position) + "]{" +
                                       std::to_string(r.interval.lo) + "," + std::to_string(r.interval.hi) + "}");
  }
  return out;
}

/// Boundary intervals of a base chain of length m in the only order that
/// keeps both endpoints monotone: prefixes [0,j] ascending, then suffixes
/// [i,m-1] for i >= 1 ascending.
inline std::vector<ChainInterval> boundary_intervals(int m) {
  std::vector<ChainInterval> out;
  for (int j = 0; j < m; ++j) out.push_back({0, 0, j});
  for (int i = 1; i < m; ++i) out.push_back({0, i, m - 1});
  return out;
}

inline int lemma2_default_length(int k) { return 1 << (k + 2); }

/// Two chains C (length m) and C' where every boundary interval of C
/// appears as the incomparability interval of 2k points of C'.
inline Construction lemma2_poset(int k, int m) {
  if (k < 1 || m < 2) throw std::invalid_argument("lemma2_poset: need k >= 1 and m >= 2");
  MonotoneChainSpec spec;
  for (const auto& iv : boundary_intervals(m)) spec.entries.emplace_back(iv, 2 * k);
  Construction c = monotone_chain_poset(m, {spec});
  c.meta.kind = "lemma2";
  c.meta.params["k"] = k;
  return c;
}

inline Construction lemma2_poset(int k) { return lemma2_poset(k, lemma2_default_length(k)); }

/// Default interval sizes and base length for the exponential construction.
/// Each level is a factor 2(a+1) above the next one, and the smallest
/// window holds 2(a+1) points.
struct Lemma4Sizing {
  std::vector<int> sizes;
  int m = 0;
};

inline Lemma4Sizing lemma4_default_sizing(int a, int w) {
  const int factor = 2 * (a + 1);
  Lemma4Sizing s;
  s.sizes.assign(std::size_t(w - 1), 0);
  int cur = factor;
  for (int i = w - 2; i >= 0; --i) {
    s.sizes[std::size_t(i)] = cur;
    cur *= factor;
  }
  s.m = cur;
  return s;
}

/// Base chain C plus side chains C_1..C_{w-1}; C_i lists every window of
/// size sizes[i-1] of C, ascending, each with multiplicity (a+1)k.
inline Construction lemma4_poset(int a, int w, int k, const std::vector<int>& sizes, int m) {
  if (a < 2 || w < 2 || k < 1) throw std::invalid_argument("lemma4_poset: need a >= 2, w >= 2, k >= 1");
  if (int(sizes.size()) != w - 1) throw std::invalid_argument("lemma4_poset: need w-1 interval sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("lemma4_poset: interval sizes must be positive");
    if (i > 0 && sizes[i] >= sizes[i - 1]) throw std::invalid_argument("lemma4_poset: interval sizes must strictly descend");
  }
  if (m < sizes[0]) throw std::invalid_argument("lemma4_poset: base chain shorter than n_1");
  std::vector<MonotoneChainSpec> specs;
  for (int size : sizes) {
    MonotoneChainSpec spec;
    for (int lo = 0; lo + size <= m; ++lo) spec.entries.emplace_back(ChainInterval{0, lo, lo + size - 1}, (a + 1) * k);
    specs.push_back(std::move(spec));
  }
  Construction c = monotone_chain_poset(m, specs);
  c.meta.kind = "lemma4";
  c.meta.params["a"] = a;
  c.meta.params["w"] = w;
  c.meta.params["k"] = k;
  c.meta.sizes = sizes;
  return c;
}

inline Construction lemma4_poset(int a, int w, int k) {
  auto s = lemma4_default_sizing(a, w);
  return lemma4_poset(a, w, k, s.sizes, s.m);
}

/// n copies of q stacked so that every point of copy i lies below every
/// point of copy j > i.
inline Construction stack_copies(const Poset& q, int n, std::shared_ptr<const ConstructionMeta> inner = nullptr) {
  if (n < 1) throw std::invalid_argument("stack_copies: need n >= 1");
  const int s = int(q.size());
  Construction out;
  out.poset = Poset::from_closed_relation(std::size_t(n * s), [&](int x, int y) {
    int cx = x / s, cy = y / s;
    if (cx != cy) return cx < cy;
    return q.less(x % s, y % s);
  });
  out.meta.kind = "stack";
  out.meta.params["n"] = n;
  out.meta.copies = n;
  out.meta.copy_size = s;
  out.meta.inner_poset = std::make_shared<const Poset>(q);
  out.meta.inner = std::move(inner);
  for (int id = 0; id < n * s; ++id) {
    out.meta.roles.push_back({RoleKind::copy, 0, id % s, {}, id / s, id % s});
    const std::string& inner_label = q.labels()[std::size_t(id % s)];
    out.poset.set_label(id, "copy" + std::to_string(id / s) + ":" + (inner_label.empty() ? std::to_string(id % s) : inner_label));
  }
  return out;
}

inline Construction stack_copies(const Construction& q, int n) {
  return stack_copies(q.poset, n, std::make_shared<const ConstructionMeta>(q.meta));
}

/// The 10-point fence: r_i < r_j iff i + 1 < j.
inline Poset fence_R() {
  Poset p = Poset::from_closed_relation(10, [](int i, int j) { return i + 1 < j; });
  for (int i = 0; i < 10; ++i) p.set_label(i, "r" + std::to_string(i + 1));
  return p;
}

/// Calls fn(m, side) for every two-chain spec on n points: a base chain of
/// length m >= n/2 and one side chain of n - m points whose intervals (empty
/// ones included) have nondecreasing endpoints. Stops early when fn returns
/// true. Every width-2 poset arises this way from a chain partition.
template <class Fn>
bool for_each_two_chain_spec(int n, Fn&& fn) {
  std::vector<ChainInterval> side;
  for (int m = (n + 1) / 2; m < n; ++m) {
    const int s = n - m;
    auto gen = [&](auto&& self, int min_lo, int min_hi) -> bool {
      if (int(side.size()) == s) return fn(m, side);
      for (int lo = min_lo; lo <= m; ++lo)
        for (int hi = std::max(min_hi, lo - 1); hi <= m - 1; ++hi) {
          side.push_back({0, lo, hi});
          bool stop = self(self, lo, hi);
          side.pop_back();
          if (stop) return true;
        }
      return false;
    };
    if (gen(gen, 0, -1)) return true;
  }
  return false;
}

inline Construction two_chain_poset(int m, const std::vector<ChainInterval>& side) {
  MonotoneChainSpec spec;
  for (const auto& iv : side) spec.entries.emplace_back(iv, 1);
  return monotone_chain_poset(m, {spec});
}

/// Width-2 test corpus: every two-chain spec with 2 <= n <= n_max whose
/// poset has width exactly 2.
inline std::vector<Construction> width2_corpus(int n_max) {
  std::vector<Construction> out;
  for (int n = 2; n <= n_max; ++n)
    for_each_two_chain_spec(n, [&](int m, const std::vector<ChainInterval>& side) {
      Construction c = two_chain_poset(m, side);
      if (width(c.poset) == 2) out.push_back(std::move(c));
      return false;
    });
  return out;
}

}  // namespace pogame

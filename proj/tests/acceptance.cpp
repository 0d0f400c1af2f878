// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Scenario criteria run the specs shipped in specs/.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "pogame/harness.hpp"

using namespace pogame;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && s > limit_s) {
    r.pass = false;
    r.detail += " (over the " + std::to_string(int(limit_s)) + " s limit)";
  }
  failures += r.pass ? 0 : 1;
  std::printf("%s %2d %-28s %8.1fs  %s\n", r.pass ? "PASS" : "FAIL", id, name.c_str(), s, r.detail.c_str());
  std::fflush(stdout);
}

ExperimentSpec load_spec(const std::string& name) {
  return ExperimentSpec::from_json(json::parse(read_text_file(std::string(POGAME_SPEC_DIR) + "/" + name + ".json")));
}

Result all_pass(const std::vector<VerificationRecord>& recs) {
  Result r;
  int ok = 0;
  for (const auto& rec : recs) {
    if (rec.pass) {
      ++ok;
    } else if (r.pass) {
      r.pass = false;
      r.detail = "first failure: " + rec.instance.dump() + " vs " + rec.opponent + " seed " + std::to_string(rec.seed) +
                 ": " + rec.detail + (rec.reproducer.empty() ? "" : " [" + rec.reproducer + "]");
    }
  }
  if (recs.empty()) r = {false, "no records"};
  const std::string tally = std::to_string(ok) + "/" + std::to_string(recs.size()) + " records";
  r.detail = r.detail.empty() ? tally : tally + "; " + r.detail;
  return r;
}

Result run_spec(const std::string& name) { return all_pass(run_experiment(load_spec(name))); }

}  // namespace

int main() {
  criterion(1, "identity suite", 300, [] { return run_spec("identity-suite"); });

  criterion(2, "dilworth cross-check", 60, [] {
    std::mt19937_64 rng(2024);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const int n = std::uniform_int_distribution<int>(1, 40)(rng);
      const double d = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
      Poset p = random_poset(n, d, i);
      auto part = min_chain_partition(p);
      if (int(part.chains.size()) != width(p)) return Result{false, "poset " + std::to_string(i)};
      std::vector<int> seen(std::size_t(n), 0);
      for (const auto& c : part.chains) {
        for (std::size_t j = 0; j < c.size(); ++j) {
          ++seen[std::size_t(c[j])];
          if (j > 0 && !p.less(c[j - 1], c[j])) return Result{false, "non-chain in poset " + std::to_string(i)};
        }
      }
      for (int v : seen)
        if (v != 1) return Result{false, "not a partition in poset " + std::to_string(i)};
    }
    return Result{true, "1000 posets, n <= 40"};
  });

  criterion(3, "painter soundness", 600, [] { return run_spec("wgame-fuzz"); });

  criterion(4, "painter necessity at w=2", 1, [] {
    // Presenter forbids the lone color on a singleton, then asks that point.
    WGameState s(3, 1);
    s.present({0, 0, 0}, 1);
    if (s.available(0, 1)) return Result{false, "a 1-color painter can still answer"};
    if (s.has_palette_color(0)) return Result{false, "point 0 already holds a palette color"};
    WGameState t(3, 2, std::vector<ChainInterval>{{0, 0, 0}});
    Painter two(2, 3);
    // the presentation is answered at once, so the ask never arrives
    if (!presenter_action(t, {PresenterAction::Kind::present, -1, {0, 0, 0}, 1}, two) || t.uncolored(0))
      return Result{false, "2-color painter lost the same script"};
    return Result{true, "1 color loses, 2 colors survive"};
  });

  criterion(5, "alice t5 wins (2,1)", 900, [] { return run_spec("t5"); });

  criterion(6, "t5 best response, w=2 n<=8", 600, [] {
    int count = 0;
    long long nodes = 0;
    for (const auto& c : width2_corpus(8)) {
      auto p = std::make_shared<const Poset>(c.poset);
      AliceT5Agent alice(c.poset, 2);
      auto r = best_response_search(p, {Variant::coloring, 2, 1, 4, Mode::standard}, alice, Actor::alice);
      nodes += r.nodes;
      ++count;
      if (r.searcher_wins) return Result{false, "Bob wins on corpus poset " + std::to_string(count - 1)};
    }
    return Result{true, std::to_string(count) + " corpus posets, " + std::to_string(nodes) + " nodes"};
  });

  criterion(7, "bob lemma2", 600, [] {
    Result r = run_spec("lemma2");
    if (!r.pass) return r;
    Construction c = lemma2_poset(2, 8);
    BobLemma2Agent bob(std::make_shared<const ConstructionMeta>(c.meta), 2);
    auto br = best_response_search(std::make_shared<const Poset>(c.poset), {Variant::coloring, 1, 1, 2, Mode::auxiliary},
                                   bob, Actor::bob);
    if (br.searcher_wins) return Result{false, "an Alice reply beats it on lemma2_poset(2, 8)"};
    r.detail += "; no Alice reply survives on lemma2_poset(2, 8)";
    return r;
  });

  criterion(8, "bob lemma4 (a=2,w=3,k=3)", 600, [] { return run_spec("lemma4"); });

  criterion(9, "lift of lemma2, (1,1) k=2", 600, [] { return run_spec("lift-coloring"); });

  criterion(10, "grundy lift, (1,2) >= 3", 600, [] { return run_spec("lift-grundy"); });

  criterion(11, "fence-free stack", 60, [] {
    auto recs = run_experiment(load_spec("t6-fence"));
    Result r = all_pass(recs);
    for (const auto& rec : recs) {
      if (rec.instance.at("n").get<int>() < 150) return Result{false, "instance below 150 points"};
      r.detail += "; n=" + rec.instance.at("n").dump() + ", max first-fit " + rec.stats.at("max_first_fit").dump() +
                  " (recorded)";
    }
    return r;
  });

  criterion(12, "width-2 grundy search", 600, [] {
    auto recs = run_experiment(load_spec("grundy-growth"));
    Result r = all_pass(recs);
    for (const auto& rec : recs) r.detail += "; " + rec.instance.at("mode").get<std::string>() + ": " + rec.detail;
    return r;
  });

  criterion(13, "out of reach, stated", 1, [] {
    return Result{true,
                  "not reproducible: exponential growth beyond tiny w, unbounded values as k grows, and the open questions; "
                  "criteria 7-10 check finite instances instead"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}

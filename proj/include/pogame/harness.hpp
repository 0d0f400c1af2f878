#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pogame/agents.hpp"
#include "pogame/constructions.hpp"
#include "pogame/game.hpp"
#include "pogame/io.hpp"
#include "pogame/solver.hpp"
#include "pogame/strategies.hpp"
#include "pogame/wgame.hpp"

namespace pogame {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- agent factory ----------------------------------------------------------

struct AgentContext {
  std::shared_ptr<const Poset> poset;
  std::shared_ptr<const ConstructionMeta> meta;
  GameConfig config;
  std::uint64_t seed = 1;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cerr;
};

/// Embedded horizon of a lifted strategy: Bob moves a copy needs before its
/// winning position.
inline int lift_horizon(const std::string& inner, int copy_size, const GameConfig& cfg) {
  if (inner == "lemma2") return cfg.k;
  if (inner == "gamma") return copy_size;
  throw SpecError("unknown lifted strategy: " + inner);
}

inline std::unique_ptr<Agent> make_agent(const std::string& spec, const AgentContext& ctx) {
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto num = [&](long long dflt) { return arg.empty() ? dflt : std::stoll(arg); };
  auto need_meta = [&](const char* what) {
    if (!ctx.meta) throw SpecError(std::string(what) + " needs construction metadata");
    return ctx.meta;
  };

  if (kind == "random") return std::make_unique<RandomAgent>(std::uint64_t(num((long long)ctx.seed)));
  if (kind == "greedy") return std::make_unique<GreedyAgent>();
  if (kind == "pass") return std::make_unique<PassAgent>();
  if (kind == "lookahead1") return std::make_unique<LookaheadAgent>(1, ctx.seed);
  if (kind == "lookahead2") return std::make_unique<LookaheadAgent>(2, ctx.seed);
  if (kind == "lookahead") return std::make_unique<LookaheadAgent>(int(num(1)), ctx.seed);
  if (kind == "minimax") return std::make_unique<MinimaxAgent>(int(num(0)));
  if (kind == "stdin") return std::make_unique<StreamAgent>(*ctx.in, *ctx.out);
  if (kind == "lemma2") {
    auto meta = need_meta("lemma2");
    if (meta->kind != "lemma2") throw SpecError("lemma2 strategy needs a lemma2 poset, got " + meta->kind);
    return std::make_unique<BobLemma2Agent>(meta, ctx.config.k);
  }
  if (kind == "lemma4") {
    auto meta = need_meta("lemma4");
    if (meta->kind != "lemma4") throw SpecError("lemma4 strategy needs a lemma4 poset, got " + meta->kind);
    return std::make_unique<BobLemma4Agent>(meta, ctx.config.a, ctx.config.k);
  }
  if (kind == "t5") return std::make_unique<AliceT5Agent>(*ctx.poset, width(*ctx.poset));
  if (kind == "lift") {
    auto meta = need_meta("lift");
    if (meta->kind != "stack") throw SpecError("lift needs stacked copies, got " + meta->kind);
    if (arg == "lemma2") {
      auto inner = meta->inner;
      if (!inner || inner->kind != "lemma2") throw SpecError("lift:lemma2 needs copies of a lemma2 poset");
      const int k = ctx.config.k;
      return std::make_unique<BobLiftAgent>(
          meta, ctx.config, [inner, k] { return std::make_unique<BobLemma2Agent>(inner, k); },
          [](const GameState& g, const Agent&) { return g.has_stuck_point(); });
    }
    if (arg == "gamma") {
      auto g = grundy_number(*meta->inner_poset);
      auto order = g.order;
      const int target = g.value;
      return std::make_unique<BobLiftAgent>(
          meta, ctx.config, [order] { return std::make_unique<OrderAgent>(order); },
          [target](const GameState& s, const Agent&) { return s.max_color() >= target; });
    }
    throw SpecError("unknown lifted strategy: " + arg);
  }
  throw SpecError("unknown agent: " + spec);
}

// ---- observed matches ---------------------------------------------------------

/// play_match with a hook after every move, given the state, the mover and
/// the agent under test; the hook returns an error text to stop the match
/// as a failure.
using MoveHook = std::function<std::string(const GameState&, Actor, const Agent&)>;

struct CheckedMatch {
  Transcript transcript;
  std::string failure;  // empty when no check failed
  std::shared_ptr<GameState> final_state;
};

inline CheckedMatch play_checked(std::shared_ptr<const Poset> poset, const GameConfig& cfg, Agent& alice, Agent& bob,
                                 const MoveHook& hook = {}, const Agent* under_test = nullptr) {
  CheckedMatch out;
  auto s = std::make_shared<GameState>(std::move(poset), cfg);
  std::vector<std::pair<std::size_t, std::string>> notes;
  const std::size_t cap = 4 * s->size() + 16 * (s->size() + 1);
  try {
    for (std::size_t steps = 0; !s->over(); ++steps) {
      if (steps > cap) throw AgentProtocolError("move cap exceeded");
      const Actor who = s->turn();
      Agent& agent = who == Actor::alice ? alice : bob;
      Move m = agent.next_move(*s);
      if (auto why = s->why_illegal(who, m); !why.empty())
        throw AgentProtocolError(agent.name() + " proposed illegal " + m.str() + ": " + why);
      s->apply(who, m);
      for (auto& a : agent.take_annotations()) notes.emplace_back(s->transcript().size(), std::move(a));
      if (hook) {
        out.failure = hook(*s, who, under_test ? *under_test : agent);
        if (!out.failure.empty()) break;
      }
    }
  } catch (const StrategyFailure& e) {
    out.failure = e.what();
  } catch (const AgentProtocolError& e) {
    out.failure = e.what();
  }
  for (Agent* ag : {&alice, &bob})
    for (auto& a : ag->take_annotations()) notes.emplace_back(s->transcript().size(), std::move(a));
  out.transcript = make_transcript(*s);
  out.transcript.annotations = std::move(notes);
  out.final_state = s;
  return out;
}

// ---- records and specs ----------------------------------------------------------

struct VerificationRecord {
  std::string scenario;
  json instance;
  std::string opponent;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
  std::string reproducer;  // path of the failing transcript / instance
  double wall_ms = 0.0;
  json stats = json::object();
};

struct ExperimentSpec {
  std::string scenario;
  json params = json::object();
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> opponents;
  std::string output_dir = "out";

  static ExperimentSpec from_json(const json& j) {
    static const std::vector<std::string> known{"identity-suite", "lemma2",     "lemma4",      "lift",
                                                "t5",             "t6-fence",   "wgame-fuzz", "grundy-growth"};
    ExperimentSpec s;
    try {
      s.scenario = j.at("scenario").get<std::string>();
      if (std::find(known.begin(), known.end(), s.scenario) == known.end()) throw SpecError("unknown scenario: " + s.scenario);
      s.params = j.value("params", json::object());
      if (j.contains("seeds")) s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
      if (j.contains("seed_count")) {
        s.seeds.clear();
        const auto base = j.value("seed_base", std::uint64_t(1));
        for (std::uint64_t i = 0; i < j.at("seed_count").get<std::uint64_t>(); ++i) s.seeds.push_back(base + i);
      }
      s.opponents = j.value("opponents", std::vector<std::string>{});
      s.output_dir = j.value("output_dir", std::string("out"));
    } catch (const json::exception& e) {
      throw SpecError(std::string("experiment spec: ") + e.what());
    }
    return s;
  }

  json to_json() const {
    return {{"scenario", scenario}, {"params", params}, {"seeds", seeds}, {"opponents", opponents}, {"output_dir", output_dir}};
  }

  /// FNV-1a over the canonical dump; embedded in every report.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json().dump()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

namespace detail {

inline std::string write_reproducer(const ExperimentSpec& spec, const std::string& tag, const Poset& p,
                                    const Transcript* t) {
  std::filesystem::create_directories(spec.output_dir);
  const std::string base = spec.output_dir + "/" + spec.scenario + "-" + tag;
  write_text_file(base + ".poset.json", poset_to_json(p).dump(1) + "\n");
  if (t) {
    write_text_file(base + ".jsonl", transcript_to_string(*t));
    return base + ".jsonl";
  }
  return base + ".poset.json";
}

template <class F>
VerificationRecord timed(const std::string& scenario, F&& body) {
  VerificationRecord r;
  r.scenario = scenario;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<int> param_list(const json& params, const char* key, std::vector<int> dflt) {
  if (!params.contains(key)) return dflt;
  const auto& v = params.at(key);
  if (v.is_array()) return v.get<std::vector<int>>();
  return {v.get<int>()};
}

}  // namespace detail

/// Residual colors per phase when every phase stops exactly at its
/// threshold.
inline std::vector<int> lemma4_expected_residuals(int a, int w, int k) {
  std::vector<int> r{k};
  for (int i = 1; i < w; ++i) {
    const int kill = i == w - 1 ? r.back() : BobLemma4Agent::threshold(r.back(), a);
    r.push_back(r.back() - kill);
  }
  return r;
}

/// Plays `strategy` (for `side`) against every opponent and seed on one
/// instance. Strategy invariants are asserted by the agents themselves
/// (StrategyFailure) and by `hook`; `judge` decides the verdict of a
/// finished match.
struct StrategyCheck {
  std::string strategy;
  Actor side = Actor::bob;
  MoveHook hook;
  std::function<std::string(const CheckedMatch&, const Agent&)> judge;
};

inline std::vector<VerificationRecord> verify_strategy(const ExperimentSpec& spec, const StrategyCheck& check,
                                                       const Construction& inst, const GameConfig& cfg,
                                                       const json& instance_params) {
  std::vector<VerificationRecord> out;
  auto poset = std::make_shared<const Poset>(inst.poset);
  auto meta = std::make_shared<const ConstructionMeta>(inst.meta);
  for (const auto& opp : spec.opponents) {
    const bool seeded = opp.rfind("random", 0) == 0 || opp.rfind("lookahead", 0) == 0;
    const std::vector<std::uint64_t> seeds = seeded ? spec.seeds : std::vector<std::uint64_t>{spec.seeds.front()};
    for (auto seed : seeds) {
      out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
        r.instance = instance_params;
        r.opponent = opp;
        r.seed = seed;
        AgentContext ctx{poset, meta, cfg, seed};
        std::unique_ptr<Agent> mine, theirs;
        try {
          mine = make_agent(check.strategy, ctx);
          theirs = make_agent(opp, ctx);
        } catch (const std::invalid_argument& e) {
          r.detail = std::string("precondition: ") + e.what();
          return;
        }
        Agent& alice = check.side == Actor::alice ? *mine : *theirs;
        Agent& bob = check.side == Actor::alice ? *theirs : *mine;
        CheckedMatch m = play_checked(poset, cfg, alice, bob, check.hook, mine.get());
        std::string why = m.failure;
        if (why.empty() && check.judge) why = check.judge(m, *mine);
        r.pass = why.empty();
        r.detail = r.pass ? m.transcript.outcome.str() : why;
        r.stats["moves"] = m.transcript.moves.size();
        r.stats["outcome"] = m.transcript.outcome.str();
        if (!r.pass)
          r.reproducer = detail::write_reproducer(spec, check.strategy + "-" + opp + "-" + std::to_string(seed), *poset,
                                                  &m.transcript);
      }));
    }
  }
  return out;
}

// ---- scenarios ------------------------------------------------------------------

inline std::vector<VerificationRecord> run_identity_suite(const ExperimentSpec& spec) {
  const int count = spec.params.value("count", 200);
  const int n_max = spec.params.value("n_max", 9);
  std::vector<VerificationRecord> out;
  const std::uint64_t base = spec.seeds.front();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base * 1000003ull + std::uint64_t(i);
    out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
      std::mt19937_64 rng(seed);
      const int n = std::uniform_int_distribution<int>(1, n_max)(rng);
      Poset p = i % 2 == 0 ? random_poset(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), seed)
                           : random_width_poset(std::uniform_int_distribution<int>(1, std::min(4, n))(rng), n, seed);
      r.seed = seed;
      r.instance = {{"n", n}, {"hash", hash_hex(p.hash())}};
      const int w = width(p);
      const int chig = game_chromatic_value(p, 1, 0).value;
      const int grg10 = grundy_game_value(p, 1, 0).value;
      const int grg01 = grundy_game_value(p, 0, 1).value;
      const int gamma = grundy_number(p).value;
      const int colg = marking_game_value(p, 1, 0).value;
      const int col = coloring_number(p);
      r.stats = {{"width", w}, {"chig10", chig}, {"grg10", grg10}, {"grg01", grg01}, {"grundy", gamma}, {"colg10", colg}, {"col", col}};
      std::string why;
      if (chig != w) why += "chig(1,0) != width; ";
      if (grg10 != w) why += "grg(1,0) != width; ";
      if (grg01 != gamma) why += "grg(0,1) != grundy; ";
      if (colg != col) why += "colg(1,0) != col; ";
      r.pass = why.empty();
      r.detail = r.pass ? "ok" : why;
      if (!r.pass) r.reproducer = detail::write_reproducer(spec, "poset-" + std::to_string(seed), p, nullptr);
    }));
  }
  return out;
}

inline std::vector<VerificationRecord> run_lemma2(const ExperimentSpec& spec) {
  std::vector<VerificationRecord> out;
  for (int k : detail::param_list(spec.params, "k", {1, 2, 3})) {
    const int m = spec.params.value("m", 0) > 0 ? spec.params.value("m", 0) : lemma2_default_length(k);
    Construction inst = lemma2_poset(k, m);
    GameConfig cfg{Variant::coloring, 1, 1, k, Mode::auxiliary};
    const auto base = inst.meta.chains[0];
    StrategyCheck check;
    check.strategy = "lemma2";
    check.side = Actor::bob;
    // Once victory is claimed the engine must agree: no point of I can be
    // colored any more.
    check.hook = [base](const GameState& s, Actor, const Agent& me) -> std::string {
      const auto& bob = dynamic_cast<const BobLemma2Agent&>(me);
      if (!bob.victory()) return "";
      if (bob.region_lo() > bob.region_hi()) return "victory with an empty region";
      for (int p = bob.region_lo(); p <= bob.region_hi(); ++p) {
        const int x = base[std::size_t(p)];
        if (!s.is_free(x)) return "region point " + std::to_string(p) + " got colored";
        if (s.available_count(x) != 0) return "region point " + std::to_string(p) + " still has a legal color";
      }
      return "";
    };
    check.judge = [](const CheckedMatch& m, const Agent& me) -> std::string {
      const auto& bob = dynamic_cast<const BobLemma2Agent&>(me);
      if (!bob.victory()) return "no victory declared";
      if (m.transcript.outcome.kind != OutcomeKind::bob_wins) return "engine outcome " + m.transcript.outcome.str();
      return "";
    };
    auto recs = verify_strategy(spec, check, inst, cfg, {{"k", k}, {"m", m}});
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

inline std::vector<VerificationRecord> run_lemma4(const ExperimentSpec& spec) {
  const int a = spec.params.value("a", 2), w = spec.params.value("w", 3), k = spec.params.value("k", 3);
  Construction inst = lemma4_poset(a, w, k);
  GameConfig cfg{Variant::coloring, a, 1, k, Mode::auxiliary};
  const auto expected = lemma4_expected_residuals(a, w, k);
  StrategyCheck check;
  check.strategy = "lemma4";
  check.side = Actor::bob;
  check.judge = [expected](const CheckedMatch& m, const Agent& me) -> std::string {
    const auto& bob = dynamic_cast<const BobLemma4Agent&>(me);
    if (!bob.victory()) return "no victory declared";
    if (bob.residuals() != expected) {
      std::string got;
      for (int r : bob.residuals()) got += std::to_string(r) + " ";
      return "residual sequence " + got + "differs from the threshold schedule";
    }
    if (bob.region_size() < 1) return "region empty at victory";
    if (m.transcript.outcome.kind != OutcomeKind::bob_wins) return "engine outcome " + m.transcript.outcome.str();
    return "";
  };
  return verify_strategy(spec, check, inst, cfg,
                         {{"a", a}, {"w", w}, {"k", k}, {"m", inst.meta.base_length()}, {"sizes", inst.meta.sizes}});
}

/// Embedded transcripts of every copy replay as auxiliary games with Alice
/// quota floor(a/b).
inline std::string check_embedded_transcripts(const BobLiftAgent& lift) {
  for (std::size_t c = 0; c < lift.copies().size(); ++c) {
    const auto& cp = lift.copies()[c];
    try {
      GameState again = replay(cp.game.poset_ptr(), lift.embedded_config(), cp.game.transcript());
      if (again.transcript().size() != cp.game.transcript().size()) return "copy " + std::to_string(c) + " replay differs";
    } catch (const IllegalMove& e) {
      return "copy " + std::to_string(c) + " embedded transcript invalid: " + e.what();
    }
  }
  return "";
}

inline std::vector<VerificationRecord> run_lift(const ExperimentSpec& spec) {
  const std::string variant = spec.params.value("variant", std::string("coloring"));
  const int a = spec.params.value("a", variant == "grundy" ? 1 : 1);
  const int b = spec.params.value("b", variant == "grundy" ? 2 : 1);
  Construction q;
  GameConfig cfg;
  std::string strategy;
  int target = 0;
  if (variant == "coloring") {
    const int k = spec.params.value("k", 2);
    q = lemma2_poset(k, spec.params.value("m", 16));
    cfg = {Variant::coloring, a, b, k, Mode::standard};
    strategy = "lift:lemma2";
  } else {
    target = spec.params.value("target", 3);
    auto hit = search_width2_grundy(spec.params.value("n_max", 8), target);
    if (!hit) throw SpecError("no width-2 poset with the requested Grundy number");
    q = hit->construction;
    cfg = {Variant::grundy, a, b, 1, Mode::standard};
    strategy = "lift:gamma";
  }
  const int horizon = lift_horizon(strategy.substr(5), int(q.poset.size()), cfg);
  const int copies = spec.params.value("copies", 0) > 0 ? spec.params.value("copies", 0)
                                                         : BobLiftAgent::default_copies(a, b, horizon);
  Construction inst = stack_copies(q, copies);
  StrategyCheck check;
  check.strategy = strategy;
  check.side = Actor::bob;
  check.judge = [variant, target](const CheckedMatch& m, const Agent& me) -> std::string {
    const auto& lift = dynamic_cast<const BobLiftAgent&>(me);
    if (auto bad = check_embedded_transcripts(lift); !bad.empty()) return bad;
    if (!lift.victory()) return "no copy reached its winning position";
    if (variant == "coloring") {
      if (m.transcript.outcome.kind != OutcomeKind::bob_wins) return "engine outcome " + m.transcript.outcome.str();
    } else if (m.transcript.outcome.value < target) {
      return "only " + std::to_string(m.transcript.outcome.value) + " colors";
    }
    return "";
  };
  return verify_strategy(spec, check, inst, cfg,
                         {{"variant", variant}, {"a", a}, {"b", b}, {"copies", copies}, {"copy_size", q.poset.size()}});
}

inline std::vector<VerificationRecord> run_t5(const ExperimentSpec& spec) {
  std::vector<VerificationRecord> out;
  StrategyCheck check;
  check.strategy = "t5";
  check.side = Actor::alice;
  check.judge = [](const CheckedMatch& m, const Agent&) -> std::string {
    if (m.transcript.outcome.kind != OutcomeKind::alice_wins) return "engine outcome " + m.transcript.outcome.str();
    // Exactly two Alice moves per round until the poset is complete.
    std::map<int, int> per_round;
    for (const auto& r : m.transcript.moves)
      if (r.actor == Actor::alice) ++per_round[r.round];
    int last = m.transcript.moves.empty() ? 0 : m.transcript.moves.back().round;
    for (auto [round, cnt] : per_round)
      if (cnt != 2 && round != last) return "round " + std::to_string(round) + " has " + std::to_string(cnt) + " Alice moves";
    return "";
  };
  const int per_w = spec.params.value("count_per_w", 10);
  const int n_max = spec.params.value("n_max", 60);
  for (int w : detail::param_list(spec.params, "w", {2, 3, 4})) {
    for (int i = 0; i < per_w; ++i) {
      const std::uint64_t seed = spec.seeds.front() * 7919ull + std::uint64_t(w * 100000 + i);
      std::mt19937_64 rng(seed);
      const int n = std::uniform_int_distribution<int>(w, n_max)(rng);
      Construction inst{random_width_poset(w, n, seed), {}};
      GameConfig cfg{Variant::coloring, 2, 1, AliceT5Agent::palette_size(w), Mode::standard};
      auto recs = verify_strategy(spec, check, inst, cfg, {{"w", w}, {"n", n}, {"poset_seed", seed}});
      out.insert(out.end(), recs.begin(), recs.end());
    }
  }
  if (spec.params.value("lemma4", false)) {
    const int a = spec.params.value("lemma4_a", 2), w = spec.params.value("lemma4_w", 3), k = spec.params.value("lemma4_k", 3);
    Construction inst = lemma4_poset(a, w, k);
    GameConfig cfg{Variant::coloring, 2, 1, AliceT5Agent::palette_size(w), Mode::standard};
    ExperimentSpec big = spec;
    big.opponents = spec.params.value("lemma4_opponents", std::vector<std::string>{"greedy", "random"});
    auto recs = verify_strategy(big, check, inst, cfg, {{"w", w}, {"n", inst.poset.size()}, {"instance", "lemma4"}});
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

inline std::vector<VerificationRecord> run_t6_fence(const ExperimentSpec& spec) {
  const int k = spec.params.value("k", 2), m = spec.params.value("m", 8), copies = spec.params.value("copies", 3);
  const int orders = spec.params.value("fuzz_orders", 10000);
  std::vector<VerificationRecord> out;
  out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
    Construction inst = stack_copies(lemma2_poset(k, m), copies);
    const Poset& p = inst.poset;
    const bool has_fence = contains_induced(p, fence_R());
    std::mt19937_64 rng(spec.seeds.front());
    std::vector<int> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    int best = 0;
    for (int t = 0; t < orders; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      best = std::max(best, first_fit_count(p, order));
    }
    r.instance = {{"k", k}, {"m", m}, {"copies", copies}, {"n", p.size()}};
    r.stats = {{"contains_fence", has_fence}, {"max_first_fit", best}, {"orders", orders}};
    r.pass = !has_fence;
    r.detail = has_fence ? "fence found" : "fence-free; max first-fit over " + std::to_string(orders) + " orders = " + std::to_string(best);
    if (!r.pass) r.reproducer = detail::write_reproducer(spec, "fence", p, nullptr);
  }));
  return out;
}

inline std::vector<VerificationRecord> run_wgame_fuzz(const ExperimentSpec& spec) {
  std::vector<VerificationRecord> out;
  const int games = spec.params.value("games", 1000);
  const int m_max = spec.params.value("m_max", 48);
  for (int w : detail::param_list(spec.params, "w", {1, 2, 3, 4})) {
    out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
      long fails = 0, rounds = 0, passes = 0, seals = 0, fallbacks = 0;
      std::string first_fail;
      for (int g = 0; g < games; ++g) {
        const std::uint64_t seed = spec.seeds.front() * 1000003ull + std::uint64_t(w) * 100000ull + std::uint64_t(g);
        std::mt19937_64 rng(seed);
        const int m = std::uniform_int_distribution<int>(1, m_max)(rng);
        auto family = random_family(m, w - 1, seed, std::uniform_int_distribution<int>(1, 3 * m)(rng));
        PresenterFuzzer presenter(seed, PresenterMix{}, family, g % 2 == 1);
        auto res = run_wgame(m, w, family, presenter, true);
        rounds += res.rounds;
        passes += res.passes;
        seals += res.seals;
        fallbacks += res.fallbacks;
        if (!res.painter_won || res.violation) {
          ++fails;
          if (first_fail.empty())
            first_fail = "seed " + std::to_string(seed) + " m=" + std::to_string(m) + ": " + res.failure;
        }
      }
      r.instance = {{"w", w}, {"games", games}, {"m_max", m_max}};
      r.stats = {{"failures", fails}, {"rounds", rounds}, {"passes", passes}, {"seals", seals}, {"fallbacks", fallbacks}};
      r.pass = fails == 0;
      r.detail = r.pass ? "painter won every game" : first_fail;
    }));
  }
  return out;
}

inline std::vector<VerificationRecord> run_grundy_growth(const ExperimentSpec& spec) {
  std::vector<VerificationRecord> out;
  const int exact_n = spec.params.value("exact_n", 8), target = spec.params.value("target", 3);
  out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
    auto hit = search_width2_grundy(exact_n, target);
    r.instance = {{"n_max", exact_n}, {"target", target}, {"mode", "exact"}};
    r.pass = hit.has_value();
    if (hit) {
      const Poset& p = hit->construction.poset;
      r.stats = {{"n", p.size()}, {"grundy", hit->grundy}, {"first_fit_witness", first_fit_count(p, hit->order)}};
      r.detail = "width-2 poset with grundy " + std::to_string(hit->grundy) + " on " + std::to_string(p.size()) + " points";
    } else {
      r.detail = "not found";
    }
  }));
  const int heur_n = spec.params.value("heuristic_n", 20);
  if (heur_n > exact_n) {
    out.push_back(detail::timed(spec.scenario, [&](VerificationRecord& r) {
      const int exhaustive_max = spec.params.value("exhaustive_max", 9);
      auto rep = search_width2_grundy_report(heur_n, 1 << 20, exhaustive_max, spec.seeds.front(),
                                             spec.params.value("samples_per_size", 300));
      r.instance = {{"n_max", heur_n}, {"mode", "heuristic"}, {"exhaustive_max", exhaustive_max}};
      r.pass = rep.best.has_value();
      if (rep.best) {
        const Poset& p = rep.best->construction.poset;
        r.stats = {{"best_grundy", rep.best->grundy}, {"n", p.size()}, {"examined", rep.examined},
                   {"first_fit_witness", first_fit_count(p, rep.best->order)}};
        r.detail = "best grundy " + std::to_string(rep.best->grundy) + " at n=" + std::to_string(p.size());
      }
    }));
  }
  return out;
}

inline std::vector<VerificationRecord> run_experiment(const ExperimentSpec& spec) {
  if (spec.scenario == "identity-suite") return run_identity_suite(spec);
  if (spec.scenario == "lemma2") return run_lemma2(spec);
  if (spec.scenario == "lemma4") return run_lemma4(spec);
  if (spec.scenario == "lift") return run_lift(spec);
  if (spec.scenario == "t5") return run_t5(spec);
  if (spec.scenario == "t6-fence") return run_t6_fence(spec);
  if (spec.scenario == "wgame-fuzz") return run_wgame_fuzz(spec);
  if (spec.scenario == "grundy-growth") return run_grundy_growth(spec);
  throw SpecError("unknown scenario: " + spec.scenario);
}

// ---- reports ----------------------------------------------------------------------

/// csv | json | markdown. Wall times are left out unless asked for, so that
/// reports of identical specs are byte-identical.
inline std::string export_report(const std::vector<VerificationRecord>& records, const std::string& format,
                                 std::uint64_t spec_hash = 0, bool timing = false) {
  std::ostringstream os;
  if (format == "csv") {
    auto q = [](std::string s) {
      std::string o = "\"";
      for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
      return o + "\"";
    };
    os << "spec_hash,scenario,instance,opponent,seed,verdict,detail,reproducer" << (timing ? ",wall_ms" : "") << "\n";
    for (const auto& r : records) {
      os << hash_hex(spec_hash) << "," << r.scenario << "," << q(r.instance.dump()) << "," << q(r.opponent) << "," << r.seed
         << "," << (r.pass ? "pass" : "fail") << "," << q(r.detail) << "," << q(r.reproducer);
      if (timing) os << "," << r.wall_ms;
      os << "\n";
    }
    return os.str();
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : records) {
      json j{{"scenario", r.scenario}, {"instance", r.instance}, {"opponent", r.opponent}, {"seed", r.seed},
             {"verdict", r.pass ? "pass" : "fail"}, {"detail", r.detail}, {"reproducer", r.reproducer}, {"stats", r.stats}};
      if (timing) j["wall_ms"] = r.wall_ms;
      arr.push_back(std::move(j));
    }
    return json{{"spec_hash", hash_hex(spec_hash)}, {"records", arr}}.dump(2) + "\n";
  }
  if (format == "markdown") {
    std::map<std::string, std::pair<int, int>> by;  // scenario -> (pass, total)
    for (const auto& r : records) {
      auto& e = by[r.scenario];
      e.first += r.pass;
      ++e.second;
    }
    os << "# Verification summary\n\nspec hash `" << hash_hex(spec_hash) << "`\n\n| scenario | passed | total |\n|---|---|---|\n";
    for (const auto& [s, e] : by) os << "| " << s << " | " << e.first << " | " << e.second << " |\n";
    bool any = false;
    for (const auto& r : records)
      if (!r.pass) {
        if (!any) os << "\n## Failures\n\n";
        any = true;
        os << "- " << r.scenario << " " << r.instance.dump() << " vs " << r.opponent << " seed " << r.seed << ": "
           << r.detail << (r.reproducer.empty() ? "" : " (" + r.reproducer + ")") << "\n";
      }
    return os.str();
  }
  throw SpecError("unknown report format: " + format);
}

}  // namespace pogame

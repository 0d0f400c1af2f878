#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pogame/constructions.hpp"
#include "pogame/game.hpp"
#include "pogame/solver.hpp"

namespace pogame {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---- posets ---------------------------------------------------------------

inline json poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.size();
  json cover = json::array();
  for (auto [x, y] : p.cover_pairs()) cover.push_back({x, y});
  j["cover"] = std::move(cover);
  j["labels"] = p.labels();
  return j;
}

/// Accepts {"n", "cover"|"relations", "labels"?}; the relation is closed.
inline Poset poset_from_json(const json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::pair<int, int>> pairs;
    const json& rel = j.contains("cover") ? j.at("cover") : j.at("relations");
    for (const auto& e : rel) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Poset p = Poset::close(n, pairs);
    if (j.contains("labels")) {
      const auto& labels = j.at("labels");
      if (labels.size() != n) throw FormatError("poset json: label count differs from n");
      for (std::size_t i = 0; i < n; ++i) p.set_label(int(i), labels[i].get<std::string>());
    }
    return p;
  } catch (const json::exception& e) {
    throw FormatError(std::string("poset json: ") + e.what());
  }
}

// ---- construction metadata ------------------------------------------------

inline const char* to_string(RoleKind k) {
  switch (k) {
    case RoleKind::base: return "base";
    case RoleKind::side: return "side";
    case RoleKind::copy: return "copy";
  }
  return "?";
}

inline json meta_to_json(const ConstructionMeta& m) {
  json j;
  j["kind"] = m.kind;
  j["params"] = m.params;
  j["sizes"] = m.sizes;
  j["copies"] = m.copies;
  j["copy_size"] = m.copy_size;
  json roles = json::array();
  for (const auto& r : m.roles)
    roles.push_back({{"kind", to_string(r.kind)},
                     {"chain", r.chain},
                     {"position", r.position},
                     {"lo", r.interval.lo},
                     {"hi", r.interval.hi},
                     {"copy", r.copy},
                     {"local", r.local}});
  j["roles"] = std::move(roles);
  if (m.inner_poset) j["inner_poset"] = poset_to_json(*m.inner_poset);
  if (m.inner) j["inner"] = meta_to_json(*m.inner);
  return j;
}

inline ConstructionMeta meta_from_json(const json& j) {
  try {
    ConstructionMeta m;
    m.kind = j.at("kind").get<std::string>();
    m.params = j.at("params").get<std::map<std::string, long long>>();
    m.sizes = j.value("sizes", std::vector<int>{});
    m.copies = j.value("copies", 0);
    m.copy_size = j.value("copy_size", 0);
    for (const auto& r : j.at("roles")) {
      PointRole role;
      const auto kind = r.at("kind").get<std::string>();
      role.kind = kind == "base" ? RoleKind::base : kind == "side" ? RoleKind::side : RoleKind::copy;
      role.chain = r.at("chain").get<int>();
      role.position = r.at("position").get<int>();
      role.interval = {0, r.at("lo").get<int>(), r.at("hi").get<int>()};
      role.copy = r.at("copy").get<int>();
      role.local = r.at("local").get<int>();
      m.roles.push_back(role);
    }
    // Chains and the duplicate index are derived from the roles.
    for (int id = 0; id < int(m.roles.size()); ++id) {
      const auto& r = m.roles[std::size_t(id)];
      if (r.kind == RoleKind::copy) continue;
      if (int(m.chains.size()) <= r.chain) m.chains.resize(std::size_t(r.chain + 1));
      m.chains[std::size_t(r.chain)].push_back(id);
      if (r.kind == RoleKind::side) m.by_interval[{r.chain, r.interval.lo, r.interval.hi}].push_back(id);
    }
    if (j.contains("inner_poset")) m.inner_poset = std::make_shared<const Poset>(poset_from_json(j.at("inner_poset")));
    if (j.contains("inner")) m.inner = std::make_shared<const ConstructionMeta>(meta_from_json(j.at("inner")));
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("meta json: ") + e.what());
  }
}

// ---- moves and transcripts ------------------------------------------------

inline json config_to_json(const GameConfig& c) {
  return {{"variant", to_string(c.variant)}, {"a", c.a}, {"b", c.b}, {"k", c.k}, {"mode", to_string(c.mode)}};
}

inline GameConfig config_from_json(const json& j) {
  GameConfig c;
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.a = j.at("a").get<int>();
  c.b = j.at("b").get<int>();
  c.k = j.value("k", 1);
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.validate();
  return c;
}

inline json move_to_json(const Move& m) {
  switch (m.kind) {
    case Move::Kind::color: return {{"kind", "color"}, {"point", m.point}, {"color", m.color}};
    case Move::Kind::choose: return {{"kind", "choose"}, {"point", m.point}};
    case Move::Kind::mark: return {{"kind", "mark"}, {"point", m.point}};
    case Move::Kind::pass: return {{"kind", "pass"}};
  }
  return {};
}

inline Move move_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "color") return Move::color_point(j.at("point").get<int>(), j.at("color").get<int>());
  if (kind == "choose") return Move::choose_point(j.at("point").get<int>());
  if (kind == "mark") return Move::mark_point(j.at("point").get<int>());
  if (kind == "pass") return Move::pass();
  throw FormatError("unknown move kind: " + kind);
}

inline json outcome_to_json(const Outcome& o) { return {{"result", o.str()}, {"value", o.value}}; }

/// JSONL: a header line, one line per move, annotation lines, and a closing
/// outcome line.
inline void write_transcript(std::ostream& os, const Transcript& t) {
  json head{{"type", "header"}, {"config", config_to_json(t.config)}, {"poset_hash", hash_hex(t.poset_hash)}};
  os << head.dump() << "\n";
  std::size_t a = 0;
  for (std::size_t i = 0; i <= t.moves.size(); ++i) {
    for (; a < t.annotations.size() && t.annotations[a].first <= i; ++a)
      os << json{{"type", "annotation"}, {"at", t.annotations[a].first}, {"text", t.annotations[a].second}}.dump() << "\n";
    if (i == t.moves.size()) break;
    const auto& r = t.moves[i];
    os << json{{"actor", to_string(r.actor)}, {"move", move_to_json(r.move)}, {"roundNo", r.round}, {"result", r.result}}
              .dump()
       << "\n";
  }
  os << json{{"type", "outcome"},
             {"outcome", outcome_to_json(t.outcome)},
             {"colors_used", t.colors_used},
             {"max_back_degree", t.max_back_degree}}
            .dump()
     << "\n";
}

inline std::string transcript_to_string(const Transcript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

inline Transcript read_transcript(std::istream& is) {
  Transcript t;
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError("transcript line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string type = j.value("type", std::string("move"));
    if (type == "header") {
      t.config = config_from_json(j.at("config"));
      t.poset_hash = std::stoull(j.at("poset_hash").get<std::string>(), nullptr, 16);
      have_header = true;
    } else if (type == "annotation") {
      t.annotations.emplace_back(j.at("at").get<std::size_t>(), j.at("text").get<std::string>());
    } else if (type == "outcome") {
      t.colors_used = j.value("colors_used", 0);
      t.max_back_degree = j.value("max_back_degree", 0);
    } else {
      if (!have_header) throw FormatError("transcript: move before header");
      MoveRecord r;
      r.actor = j.at("actor").get<std::string>() == "alice" ? Actor::alice : Actor::bob;
      r.move = move_from_json(j.at("move"));
      r.round = j.at("roundNo").get<int>();
      r.result = j.value("result", 0);
      t.moves.push_back(r);
    }
  }
  if (!have_header) throw FormatError("transcript: missing header");
  return t;
}

inline Transcript read_transcript_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_transcript(in);
}

/// Replays a transcript against a poset; checks the hash and returns the
/// final state.
inline GameState replay_transcript(std::shared_ptr<const Poset> p, const Transcript& t) {
  if (p->hash() != t.poset_hash) throw FormatError("transcript poset hash " + hash_hex(t.poset_hash) + " does not match " + hash_hex(p->hash()));
  return replay(std::move(p), t.config, t.moves);
}

// ---- reports ----------------------------------------------------------------

inline json solve_report_to_json(const SolveReport& r) {
  json j{{"parameter", r.parameter},
         {"value", r.value},
         {"exact", r.exact},
         {"nodes", r.nodes},
         {"memo_entries", r.memo_entries}};
  if (!r.principal_variation.moves.empty() || r.parameter == "chig" || r.parameter == "grg" || r.parameter == "colg") {
    j["config"] = config_to_json(r.config);
    j["principal_variation"] = transcript_to_string(r.principal_variation);
  }
  if (!r.witness_order.empty()) j["witness_order"] = r.witness_order;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace pogame

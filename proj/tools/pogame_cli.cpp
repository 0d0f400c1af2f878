// pogame: command-line front end for generating posets, playing and solving
// games, fuzzing the w-game painter, and running verification specs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pogame/harness.hpp"

using namespace pogame;

namespace {

struct Loaded {
  std::shared_ptr<const Poset> poset;
  std::shared_ptr<const ConstructionMeta> meta;
};

Loaded load(const std::string& poset_path, const std::string& meta_path) {
  Loaded l;
  l.poset = std::make_shared<const Poset>(poset_from_json(json::parse(read_text_file(poset_path))));
  if (!meta_path.empty()) {
    auto m = meta_from_json(json::parse(read_text_file(meta_path)));
    if (m.roles.size() != l.poset->size()) throw FormatError("metadata describes a different number of points");
    l.meta = std::make_shared<const ConstructionMeta>(std::move(m));
  }
  return l;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posets, coloring games and their strategies"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a poset (JSON) and its metadata");
  std::string kind = "lemma2", out_path, meta_path;
  int k = 2, m = 0, a = 2, w = 3, n = 10, copies = 3;
  std::uint64_t seed = 1;
  double density = 0.3;
  std::string inner = "lemma2";
  gen->add_option("--kind", kind, "lemma2 | lemma4 | stack | fence | random | random-width | chain | antichain")->required();
  gen->add_option("--k", k, "colors");
  gen->add_option("--m", m, "base chain length (0 = default)");
  gen->add_option("--a", a, "Alice quota (lemma4)");
  gen->add_option("--w", w, "width");
  gen->add_option("--n", n, "points");
  gen->add_option("--copies", copies, "copies (stack)");
  gen->add_option("--inner", inner, "stacked poset: lemma2 | lemma4");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--density", density, "relation density (random)");
  gen->add_option("--out", out_path, "poset file (default stdout)");
  gen->add_option("--meta", meta_path, "metadata file");

  // play
  auto* play = app.add_subcommand("play", "play one match and write its transcript");
  std::string poset_path, pmeta, variant = "coloring", mode = "standard", alice = "greedy", bob = "greedy", transcript_path;
  int pa = 1, pb = 1, pk = 2;
  std::uint64_t pseed = 1;
  play->add_option("--poset", poset_path, "poset JSON")->required();
  play->add_option("--meta", pmeta, "metadata JSON (strategies that need roles)");
  play->add_option("--variant", variant, "coloring | grundy | marking");
  play->add_option("--a", pa, "Alice moves per turn");
  play->add_option("--b", pb, "Bob moves per turn");
  play->add_option("--k", pk, "palette size");
  play->add_option("--mode", mode, "standard | auxiliary");
  play->add_option("--alice", alice, "agent for Alice");
  play->add_option("--bob", bob, "agent for Bob");
  play->add_option("--seed", pseed, "seed for random agents");
  play->add_option("--transcript", transcript_path, "transcript JSONL (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact values on small posets");
  std::string sposet, param = "chig", smode = "standard";
  int sa = 1, sb = 1;
  long long budget = 20'000'000;
  int max_points = 10;
  solve->add_option("--poset", sposet, "poset JSON")->required();
  solve->add_option("--param", param, "chig | grg | colg | grundy | col | width");
  solve->add_option("--a", sa, "Alice moves per turn");
  solve->add_option("--b", sb, "Bob moves per turn");
  solve->add_option("--mode", smode, "standard | auxiliary");
  solve->add_option("--budget", budget, "node budget");
  solve->add_option("--max-points", max_points, "largest poset the game solver accepts");

  // fuzz-wgame
  auto* fuzz = app.add_subcommand("fuzz-wgame", "random Presenter games against the recursive Painter");
  int fw = 3, games = 1000, m_max = 48;
  std::uint64_t fseed = 1;
  fuzz->add_option("--w", fw, "depth (palette 2^(w-1))");
  fuzz->add_option("--games", games, "games");
  fuzz->add_option("--m-max", m_max, "largest chain");
  fuzz->add_option("--seed", fseed, "seed");

  // verify
  auto* verify = app.add_subcommand("verify", "run an experiment spec");
  std::string spec_path, report_dir, format = "markdown";
  bool timing = false;
  verify->add_option("--spec", spec_path, "experiment spec JSON")->required();
  verify->add_option("--report-dir", report_dir, "write report.{csv,json,md} here");
  verify->add_option("--format", format, "stdout format: csv | json | markdown");
  verify->add_flag("--timing", timing, "include wall times in reports");

  // report
  auto* report = app.add_subcommand("report", "convert a JSON report to another format");
  std::string in_report, rformat = "markdown";
  report->add_option("--in", in_report, "JSON report written by verify")->required();
  report->add_option("--format", rformat, "csv | json | markdown");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Construction c;
      if (kind == "lemma2") c = lemma2_poset(k, m > 0 ? m : lemma2_default_length(k));
      else if (kind == "lemma4") c = lemma4_poset(a, w, k);
      else if (kind == "stack") {
        Construction q = inner == "lemma4" ? lemma4_poset(a, w, k) : lemma2_poset(k, m > 0 ? m : lemma2_default_length(k));
        c = stack_copies(q, copies);
      } else if (kind == "fence") c.poset = fence_R();
      else if (kind == "random") c.poset = random_poset(n, density, seed);
      else if (kind == "random-width") c.poset = random_width_poset(w, n, seed);
      else if (kind == "chain") c.poset = chain_poset(std::size_t(n));
      else if (kind == "antichain") c.poset = antichain_poset(std::size_t(n));
      else throw SpecError("unknown kind: " + kind);
      emit(out_path, poset_to_json(c.poset).dump() + "\n");
      if (!meta_path.empty()) {
        if (c.meta.roles.empty()) throw SpecError(kind + " has no metadata");
        write_text_file(meta_path, meta_to_json(c.meta).dump() + "\n");
      }
      std::cerr << kind << ": " << c.poset.size() << " points, width " << width(c.poset) << ", hash "
                << hash_hex(c.poset.hash()) << "\n";
      return 0;
    }

    if (*play) {
      Loaded l = load(poset_path, pmeta);
      GameConfig cfg{parse_variant(variant), pa, pb, pk, parse_mode(mode)};
      cfg.validate();
      AgentContext ctx{l.poset, l.meta, cfg, pseed};
      auto al = make_agent(alice, ctx);
      auto bo = make_agent(bob, ctx);
      CheckedMatch res = play_checked(l.poset, cfg, *al, *bo);
      emit(transcript_path, transcript_to_string(res.transcript));
      std::cerr << "outcome: " << res.transcript.outcome.str() << "\n";
      if (!res.failure.empty()) {
        std::cerr << "strategy failure: " << res.failure << "\n";
        return 1;
      }
      return 0;
    }

    if (*solve) {
      Loaded l = load(sposet, "");
      const Poset& p = *l.poset;
      SolverBudget b;
      b.max_nodes = budget;
      b.max_points = max_points;
      const Mode md = parse_mode(smode);
      SolveReport r;
      if (param == "chig") r = game_chromatic_value(p, sa, sb, md, b);
      else if (param == "grg") r = grundy_game_value(p, sa, sb, md, b);
      else if (param == "colg") r = marking_game_value(p, sa, sb, md, b);
      else if (param == "grundy") {
        auto g = grundy_number(p, budget);
        r.parameter = "grundy";
        r.value = g.value;
        r.exact = g.exact;
        r.witness_order = g.order;
        r.nodes = g.nodes;
      } else if (param == "col") {
        r.parameter = "col";
        r.value = coloring_number(p);
      } else if (param == "width") {
        r.parameter = "width";
        r.value = width(p);
      } else {
        throw SpecError("unknown parameter: " + param);
      }
      std::cout << solve_report_to_json(r).dump(2) << "\n";
      return 0;
    }

    if (*fuzz) {
      ExperimentSpec spec;
      spec.scenario = "wgame-fuzz";
      spec.params = {{"w", fw}, {"games", games}, {"m_max", m_max}};
      spec.seeds = {fseed};
      auto recs = run_experiment(spec);
      std::cout << export_report(recs, "markdown", spec.hash());
      for (const auto& r : recs) std::cout << r.stats.dump() << "\n";
      return std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
    }

    if (*verify) {
      ExperimentSpec spec = ExperimentSpec::from_json(json::parse(read_text_file(spec_path)));
      auto recs = run_experiment(spec);
      const auto h = spec.hash();
      if (!report_dir.empty()) {
        std::filesystem::create_directories(report_dir);
        write_text_file(report_dir + "/report.csv", export_report(recs, "csv", h, timing));
        write_text_file(report_dir + "/report.json", export_report(recs, "json", h, timing));
        write_text_file(report_dir + "/report.md", export_report(recs, "markdown", h, timing));
      }
      std::cout << export_report(recs, format, h, timing);
      return std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
    }

    if (*report) {
      json j = json::parse(read_text_file(in_report));
      std::vector<VerificationRecord> recs;
      for (const auto& e : j.at("records")) {
        VerificationRecord r;
        r.scenario = e.at("scenario").get<std::string>();
        r.instance = e.at("instance");
        r.opponent = e.value("opponent", std::string());
        r.seed = e.value("seed", std::uint64_t(0));
        r.pass = e.at("verdict").get<std::string>() == "pass";
        r.detail = e.value("detail", std::string());
        r.reproducer = e.value("reproducer", std::string());
        r.stats = e.value("stats", json::object());
        if (e.contains("wall_ms")) r.wall_ms = e.at("wall_ms").get<double>();
        recs.push_back(std::move(r));
      }
      const bool has_timing = !j.at("records").empty() && j.at("records")[0].contains("wall_ms");
      std::cout << export_report(recs, rformat, std::stoull(j.at("spec_hash").get<std::string>(), nullptr, 16), has_timing);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

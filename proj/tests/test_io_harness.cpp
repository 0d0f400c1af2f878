#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "pogame/harness.hpp"

using namespace pogame;

namespace {

std::string tmp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("pogame-test-" + name);
  std::filesystem::remove_all(d);
  return d.string();
}

}  // namespace

TEST(PosetJson, Roundtrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Poset p = random_poset(15, 0.2, seed);
    Poset q = poset_from_json(json::parse(poset_to_json(p).dump()));
    ASSERT_EQ(q.size(), p.size());
    for (int x = 0; x < 15; ++x)
      for (int y = 0; y < 15; ++y) ASSERT_EQ(q.less(x, y), p.less(x, y));
    EXPECT_EQ(q.hash(), p.hash());
    EXPECT_EQ(q.labels(), p.labels());
  }
}

TEST(PosetJson, RelationsAreClosedAndLabelsChecked) {
  Poset p = poset_from_json(json::parse(R"({"n":3,"relations":[[0,1],[1,2]]})"));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_THROW(poset_from_json(json::parse(R"({"n":2,"cover":[],"labels":["a"]})")), FormatError);
  EXPECT_THROW(poset_from_json(json::parse(R"({"cover":[]})")), FormatError);
}

TEST(MetaJson, Roundtrip) {
  Construction c = stack_copies(lemma2_poset(1, 4), 2);
  json j = meta_to_json(c.meta);
  ConstructionMeta m = meta_from_json(json::parse(j.dump()));
  EXPECT_EQ(meta_to_json(m), j);
  ASSERT_TRUE(m.inner);
  EXPECT_EQ(m.inner->kind, "lemma2");
}

TEST(TranscriptJsonl, RoundtripAndReplay) {
  auto p = std::make_shared<const Poset>(random_poset(12, 0.25, 4));
  GreedyAgent alice;
  RandomAgent bob(7);
  auto r = play_match(p, {Variant::coloring, 2, 1, 4, Mode::auxiliary}, alice, bob);
  std::istringstream in(transcript_to_string(r.transcript));
  Transcript t = read_transcript(in);
  ASSERT_EQ(t.moves.size(), r.transcript.moves.size());
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    EXPECT_EQ(t.moves[i].move, r.transcript.moves[i].move);
    EXPECT_EQ(t.moves[i].actor, r.transcript.moves[i].actor);
    EXPECT_EQ(t.moves[i].round, r.transcript.moves[i].round);
  }
  EXPECT_EQ(replay_transcript(p, t).outcome(), r.transcript.outcome);
  EXPECT_EQ(transcript_to_string(t).substr(0, 20), transcript_to_string(r.transcript).substr(0, 20));
}

TEST(TranscriptJsonl, HashMismatchIsRejected) {
  auto p = std::make_shared<const Poset>(chain_poset(3));
  RandomAgent a(1), b(2);
  auto r = play_match(p, {Variant::coloring, 1, 1, 1, Mode::standard}, a, b);
  auto other = std::make_shared<const Poset>(antichain_poset(3));
  EXPECT_THROW(replay_transcript(other, r.transcript), FormatError);
}

TEST(TranscriptJsonl, MalformedInputIsRejected) {
  std::istringstream no_header(R"({"actor":"alice","move":{"kind":"pass"},"roundNo":1})");
  EXPECT_THROW(read_transcript(no_header), FormatError);
  std::istringstream garbage("{not json\n");
  EXPECT_THROW(read_transcript(garbage), FormatError);
}

TEST(ExperimentSpec, ParseErrors) {
  EXPECT_THROW(ExperimentSpec::from_json(json::parse(R"({"scenario":"nope"})")), SpecError);
  EXPECT_THROW(ExperimentSpec::from_json(json::parse(R"({"params":{}})")), SpecError);
  EXPECT_THROW(ExperimentSpec::from_json(json::parse(R"({"scenario":"t5","seeds":"x"})")), SpecError);
  auto s = ExperimentSpec::from_json(json::parse(R"({"scenario":"t5","seed_count":3,"seed_base":10})"));
  EXPECT_EQ(s.seeds, (std::vector<std::uint64_t>{10, 11, 12}));
}

TEST(ExperimentSpec, ShippedSpecsParse) {
  for (const auto& e : std::filesystem::directory_iterator(POGAME_SPEC_DIR)) {
    auto s = ExperimentSpec::from_json(json::parse(read_text_file(e.path().string())));
    EXPECT_FALSE(s.scenario.empty()) << e.path();
  }
}

TEST(ExperimentSpec, HashTracksContent) {
  auto a = ExperimentSpec::from_json(json::parse(R"({"scenario":"t5","seeds":[1]})"));
  auto b = a;
  EXPECT_EQ(a.hash(), b.hash());
  b.seeds.push_back(2);
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Harness, UnknownAgentIsASpecError) {
  auto p = std::make_shared<const Poset>(chain_poset(2));
  AgentContext ctx{p, nullptr, {Variant::coloring, 1, 1, 1, Mode::standard}, 1};
  EXPECT_THROW(make_agent("no-such-agent", ctx), SpecError);
  EXPECT_THROW(make_agent("lemma2", ctx), SpecError);
  EXPECT_NO_THROW(make_agent("greedy", ctx));
}

TEST(Harness, ReportsAreByteIdentical) {
  auto spec = ExperimentSpec::from_json(
      json::parse(R"({"scenario":"identity-suite","params":{"count":10,"n_max":6},"seeds":[3],"output_dir":")" +
                  tmp_dir("ident") + "\"}"));
  auto r1 = run_experiment(spec);
  auto r2 = run_experiment(spec);
  ASSERT_FALSE(r1.empty());
  for (const char* f : {"csv", "json", "markdown"}) EXPECT_EQ(export_report(r1, f, spec.hash()), export_report(r2, f, spec.hash()));
  EXPECT_THROW(export_report(r1, "xml"), SpecError);
  EXPECT_NE(export_report(r1, "csv", 0, true), export_report(r1, "csv"));
}

TEST(Harness, FailingRecordLeavesAReplayableReproducer) {
  ExperimentSpec spec;
  spec.scenario = "lemma2";
  spec.opponents = {"random"};
  spec.seeds = {5};
  spec.output_dir = tmp_dir("repro");
  Construction inst = lemma2_poset(1, 4);
  GameConfig cfg{Variant::coloring, 1, 1, 3, Mode::standard};
  StrategyCheck check{"greedy", Actor::alice, {}, [](const CheckedMatch&, const Agent&) { return std::string("forced"); }};
  auto recs = verify_strategy(spec, check, inst, cfg, json{{"k", 1}});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_FALSE(recs[0].pass);
  EXPECT_EQ(recs[0].detail, "forced");
  ASSERT_TRUE(std::filesystem::exists(recs[0].reproducer));
  auto p = std::make_shared<const Poset>(inst.poset);
  Transcript t = read_transcript_file(recs[0].reproducer);
  EXPECT_TRUE(replay_transcript(p, t).over());
  EXPECT_NE(export_report(recs, "markdown").find("## Failures"), std::string::npos);
}

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "preftriads/dataset.hpp"
#include "test_util.hpp"

using namespace preftriads;
using testutil::P;
using testutil::TempDir;
using testutil::W;

namespace {

const char* kTopicsCsv =
    "topic,item1,item2,item3,item4,item5\n"
    "chat_app,WhatsApp,Facebook,Hangouts,SMS,Skype\n"
    "website,Google,Facebook,Youtube,Wikipedia,Amazon\n";

const char* kPrefsCsv =
    "node_id,topic,ranking\n"
    "0,chat_app,WhatsApp>Facebook>Hangouts>SMS>Skype\n"
    "0,website,Google>Youtube>Amazon>Facebook>Wikipedia\n"
    "1,chat_app,SMS>Skype>WhatsApp>Hangouts>Facebook\n"
    "1,website,Amazon>Google>Youtube>Wikipedia>Facebook\n"
    "2,chat_app,Facebook>WhatsApp>Skype>SMS>Hangouts\n"
    "2,website,Wikipedia>Google>Facebook>Amazon>Youtube\n";

PreferenceDataset load_fixture(const TempDir& dir) {
  testutil::write_file(dir.file("topics.csv"), kTopicsCsv);
  testutil::write_file(dir.file("prefs.csv"), kPrefsCsv);
  return load_dataset(dir.file("prefs.csv"), dir.file("topics.csv"));
}

}  // namespace

TEST_SUITE_BEGIN("dataset");

TEST_CASE("load a small fixture") {
  TempDir dir;
  LoadReport report;
  testutil::write_file(dir.file("topics.csv"), kTopicsCsv);
  testutil::write_file(dir.file("prefs.csv"), kPrefsCsv);
  const PreferenceDataset ds =
      load_dataset(dir.file("prefs.csv"), dir.file("topics.csv"), {}, &report);

  CHECK(report.node_count == 3);
  CHECK(report.rankings_per_topic == std::vector<std::size_t>{3, 3});
  REQUIRE(ds.topics.size() == 2);
  CHECK(ds.topics[0].name == "chat_app");
  CHECK(ds.topics[1].items.label(4) == "Amazon");
  CHECK(ds.node_ids() == std::vector<NodeId>{0, 1, 2});
  const Permutation* p = ds.rankings[0].find(1);
  REQUIRE(p != nullptr);
  CHECK(format_ordering(*p, ds.topics[0].items) ==
        "SMS>Skype>WhatsApp>Hangouts>Facebook");
  CHECK(ds.rankings[0].find(7) == nullptr);
}

TEST_CASE("loader rejects malformed input with line numbers") {
  TempDir dir;
  testutil::write_file(dir.file("topics.csv"), kTopicsCsv);

  SUBCASE("duplicate item in a ranking") {
    testutil::write_file(
        dir.file("prefs.csv"),
        "node_id,topic,ranking\n"
        "0,chat_app,WhatsApp>WhatsApp>SMS>Skype>Hangouts\n");
    try {
      load_dataset(dir.file("prefs.csv"), dir.file("topics.csv"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.label == "WhatsApp");
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("incomplete ranking") {
    testutil::write_file(dir.file("prefs.csv"),
                         "node_id,topic,ranking\n"
                         "0,chat_app,WhatsApp>Facebook>Hangouts>SMS\n");
    try {
      load_dataset(dir.file("prefs.csv"), dir.file("topics.csv"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.label == "Skype");
    }
  }
  SUBCASE("unknown topic") {
    testutil::write_file(
        dir.file("prefs.csv"),
        "node_id,topic,ranking\n"
        "0,sports,WhatsApp>Facebook>Hangouts>SMS>Skype\n");
    CHECK_THROWS_AS(load_dataset(dir.file("prefs.csv"), dir.file("topics.csv")),
                    SchemaError);
  }
  SUBCASE("bad node id") {
    testutil::write_file(
        dir.file("prefs.csv"),
        "node_id,topic,ranking\n"
        "x,chat_app,WhatsApp>Facebook>Hangouts>SMS>Skype\n");
    CHECK_THROWS_AS(load_dataset(dir.file("prefs.csv"), dir.file("topics.csv")),
                    SchemaError);
  }
  SUBCASE("field count") {
    testutil::write_file(dir.file("prefs.csv"),
                         "node_id,topic,ranking\n"
                         "0,chat_app\n");
    CHECK_THROWS_AS(load_dataset(dir.file("prefs.csv"), dir.file("topics.csv")),
                    SchemaError);
  }
}

TEST_CASE("incomplete nodes are rejected by default, droppable on demand") {
  TempDir dir;
  testutil::write_file(dir.file("topics.csv"), kTopicsCsv);
  testutil::write_file(
      dir.file("prefs.csv"),
      "node_id,topic,ranking\n"
      "0,chat_app,WhatsApp>Facebook>Hangouts>SMS>Skype\n"
      "0,website,Google>Youtube>Amazon>Facebook>Wikipedia\n"
      "1,chat_app,SMS>Skype>WhatsApp>Hangouts>Facebook\n");

  CHECK_THROWS_AS(load_dataset(dir.file("prefs.csv"), dir.file("topics.csv")),
                  SchemaError);

  LoadReport report;
  LoadOptions options;
  options.drop_incomplete_nodes = true;
  const PreferenceDataset ds = load_dataset(
      dir.file("prefs.csv"), dir.file("topics.csv"), options, &report);
  CHECK(report.node_count == 2);
  CHECK(report.dropped_rankings == 1);
  CHECK(ds.rankings[0].nodes.size() == 2);
  CHECK(ds.rankings[1].nodes.size() == 1);
}

TEST_CASE("save and reload round-trips, with canonical bytes") {
  TempDir dir;
  const PreferenceDataset ds = load_fixture(dir);
  save_dataset(ds, dir.file("out_prefs.csv"), dir.file("out_topics.csv"));
  const PreferenceDataset again =
      load_dataset(dir.file("out_prefs.csv"), dir.file("out_topics.csv"));
  save_dataset(again, dir.file("out_prefs2.csv"), dir.file("out_topics2.csv"));

  CHECK(testutil::read_file(dir.file("out_prefs.csv")) ==
        testutil::read_file(dir.file("out_prefs2.csv")));
  CHECK(testutil::read_file(dir.file("out_topics.csv")) ==
        testutil::read_file(dir.file("out_topics2.csv")));

  REQUIRE(again.topics.size() == ds.topics.size());
  for (std::size_t t = 0; t < ds.topics.size(); ++t) {
    CHECK(again.topics[t].name == ds.topics[t].name);
    CHECK(again.topics[t].items == ds.topics[t].items);
    CHECK(again.rankings[t].nodes == ds.rankings[t].nodes);
    CHECK(again.rankings[t].orderings == ds.rankings[t].orderings);
  }
}

TEST_CASE("subset extraction") {
  TempDir dir;
  const PreferenceDataset ds = load_fixture(dir);
  const std::vector<PreferenceSet> sets = extract_subsets(ds);
  REQUIRE(sets.size() == 2 * kSubsetsPerTopic);

  for (std::size_t i = 0; i < sets.size(); ++i) {
    CHECK(sets[i].set_index() == i);
    CHECK(sets[i].nodes.size() == 3);
  }

  SUBCASE("a known extraction") {
    // node 0, chat_app: WhatsApp>Facebook>Hangouts>SMS>Skype; keep items
    // {WhatsApp, Facebook, Skype} = indices {0, 1, 4} -> subset rank 2
    const PreferenceSet& ps = sets[2];
    CHECK(ps.kept_items == std::array<std::uint32_t, 3>{0, 1, 4});
    CHECK(ps.alphabet.labels() ==
          std::vector<std::string>{"WhatsApp", "Facebook", "Skype"});
    CHECK(format_ordering(ps.orderings[0], ps.alphabet) ==
          "WhatsApp>Facebook>Skype");
    // node 1: SMS>Skype>WhatsApp>Hangouts>Facebook -> Skype>WhatsApp>Facebook
    CHECK(format_ordering(ps.orderings[1], ps.alphabet) ==
          "Skype>WhatsApp>Facebook");
  }

  SUBCASE("order consistency for every set, node and kept pair") {
    for (const PreferenceSet& ps : sets) {
      const TopicRankings& tr = ds.rankings[ps.topic_index];
      for (std::size_t node = 0; node < ps.nodes.size(); ++node) {
        const Permutation& full = tr.orderings[node];
        const Permutation& cut = ps.orderings[node];
        const Permutation full_ranks = full.inverse();
        const Permutation cut_ranks = cut.inverse();
        for (std::uint32_t x = 0; x < 3; ++x) {
          for (std::uint32_t y = x + 1; y < 3; ++y) {
            const bool full_before = full_ranks[ps.kept_items[x]] <
                                     full_ranks[ps.kept_items[y]];
            const bool cut_before = cut_ranks[x] < cut_ranks[y];
            CHECK(full_before == cut_before);
          }
        }
      }
    }
  }

  SUBCASE("restriction example on a single word") {
    // ADCEB restricted to {A, B, E} reads AEB
    const AlternativeAlphabet items = AlternativeAlphabet::default_for(5);
    const Permutation full = parse_ordering("ADCEB", items);
    const Permutation cut =
        restrict_ordering(full, std::array<std::uint32_t, 3>{0, 1, 4});
    const AlternativeAlphabet kept({"A", "B", "E"});
    CHECK(format_ordering(cut, kept) == "AEB");
  }
}

TEST_CASE("extraction demands the 5-item schema") {
  PreferenceDataset ds;
  ds.topics.push_back(TopicSpec{"small", AlternativeAlphabet({"A", "B", "C"})});
  ds.rankings.resize(1);
  CHECK_THROWS_AS(extract_subsets(ds), SchemaError);
}

TEST_CASE("empirical distribution") {
  SUBCASE("point mass") {
    std::vector<std::uint8_t> codes(5, ordering_code(P("ABC")));
    const EmpiricalDistribution dist = EmpiricalDistribution::from_codes(codes);
    CHECK(dist.sample_count() == 5);
    CHECK(dist.weights()[0] == 1.0);
    for (std::size_t i = 1; i < 6; ++i) CHECK(dist.weights()[i] == 0.0);
  }
  SUBCASE("mixed counts") {
    const std::vector<std::uint8_t> codes = {
        ordering_code(P("ABC")), ordering_code(P("ABC")),
        ordering_code(P("CBA")), ordering_code(P("BAC"))};
    const EmpiricalDistribution dist = EmpiricalDistribution::from_codes(codes);
    const std::array<double, 6> expected = {0.5, 0.0, 0.25, 0.0, 0.0, 0.25};
    CHECK(dist.weights() == expected);
    std::uint64_t total = 0;
    for (const auto c : dist.counts()) total += c;
    CHECK(total == dist.sample_count());
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(EmpiricalDistribution::from_codes({}), EmptyInputError);
    PreferenceSet ps{0, 0, {0, 1, 2},
                     AlternativeAlphabet::default_for(3), {}, {}};
    CHECK_THROWS_AS(empirical_distribution(ps), EmptyInputError);
  }
  SUBCASE("uniform assignment concentrates near 1/6") {
    Rng rng(77);
    std::vector<std::uint8_t> codes(6000);
    for (auto& c : codes) c = static_cast<std::uint8_t>(rng.below(6));
    const EmpiricalDistribution dist = EmpiricalDistribution::from_codes(codes);
    for (const double w : dist.weights()) {
      CHECK(std::abs(w - 1.0 / 6.0) < 0.02);
    }
  }
}

TEST_CASE("sample_assignment") {
  const std::vector<std::uint8_t> base = {0, 0, 0, 1, 1, 2, 3, 4, 5, 5};
  const EmpiricalDistribution dist = EmpiricalDistribution::from_codes(base);
  std::vector<NodeId> nodes(100000);
  std::iota(nodes.begin(), nodes.end(), 0u);

  const auto a = sample_assignment(dist, nodes, nodes.size(), 31337);
  const auto b = sample_assignment(dist, nodes, nodes.size(), 31337);
  CHECK(a == b);

  SUBCASE("total variation to the source distribution stays under 0.01") {
    std::array<std::uint64_t, 6> counts{};
    for (const std::uint8_t c : a) ++counts[c];
    double tv = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      tv += std::abs(static_cast<double>(counts[i]) /
                         static_cast<double>(nodes.size()) -
                     dist.weights()[i]);
    }
    CHECK(tv / 2.0 < 0.01);
  }

  SUBCASE("point mass maps every node to the same ordering") {
    const std::vector<std::uint8_t> one(4, 3);
    const EmpiricalDistribution point = EmpiricalDistribution::from_codes(one);
    const auto codes = sample_assignment(point, nodes, nodes.size(), 1);
    CHECK(std::all_of(codes.begin(), codes.end(),
                      [](std::uint8_t c) { return c == 3; }));
  }
}

TEST_CASE("synthetic dataset generator") {
  SUBCASE("uniform when skew is 0") {
    const PreferenceDataset ds = generate_synthetic_dataset(6000, 1, 5, 0.0);
    std::map<std::vector<std::uint32_t>, std::uint64_t> freq;
    for (const Permutation& p : ds.rankings[0].orderings) ++freq[p.word()];
    CHECK(freq.size() == 120);
    for (const auto& [word, count] : freq) {
      // expect 50 per ordering; allow generous slack for a fixed seed
      CHECK(count > 15);
      CHECK(count < 110);
    }
  }
  SUBCASE("degenerate when skew is 1") {
    const PreferenceDataset ds = generate_synthetic_dataset(50, 2, 9, 1.0);
    for (std::size_t t = 0; t < 2; ++t) {
      const Permutation& reference = ds.rankings[t].orderings[0];
      for (const Permutation& p : ds.rankings[t].orderings) {
        CHECK(p == reference);
      }
    }
    // references are topic-specific draws, not a fixed word
    CHECK(ds.rankings[0].orderings[0] != ds.rankings[1].orderings[0]);
  }
  SUBCASE("schema round-trip") {
    TempDir dir;
    const PreferenceDataset ds = generate_synthetic_dataset(12, 3, 42, 0.4);
    CHECK(ds.topics.size() == 3);
    save_dataset(ds, dir.file("p.csv"), dir.file("t.csv"));
    const PreferenceDataset again =
        load_dataset(dir.file("p.csv"), dir.file("t.csv"));
    CHECK(again.topics.size() == 3);
    CHECK(again.rankings[2].orderings == ds.rankings[2].orderings);
    CHECK(extract_subsets(again).size() == 30);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(generate_synthetic_dataset(2, 1, 0, 0.0),
                    InvalidSizeError);
    CHECK_THROWS_AS(generate_synthetic_dataset(10, 0, 0, 0.0),
                    InvalidSizeError);
    CHECK_THROWS_AS(generate_synthetic_dataset(10, 1, 0, 1.5),
                    InvalidArgumentError);
  }
}

TEST_CASE("preference set CSV export") {
  TempDir dir;
  const PreferenceDataset ds = load_fixture(dir);
  const std::vector<PreferenceSet> sets = extract_subsets(ds);
  std::ostringstream out;
  write_preference_set_csv(sets[2], out);
  CHECK(out.str() ==
        "node_id,ordering\n"
        "0,WhatsApp>Facebook>Skype\n"
        "1,Skype>WhatsApp>Facebook\n"
        "2,Facebook>WhatsApp>Skype\n");
}

TEST_CASE("assignment codes") {
  TempDir dir;
  const PreferenceDataset ds = load_fixture(dir);
  const std::vector<PreferenceSet> sets = extract_subsets(ds);
  const std::vector<std::uint8_t> codes = assignment_codes(sets[0], 5);
  CHECK(codes.size() == 5);
  for (std::size_t node = 0; node < 3; ++node) {
    CHECK(codes[node] == ordering_code(sets[0].orderings[node]));
  }
  CHECK(codes[3] == kNoOrdering);
  CHECK(codes[4] == kNoOrdering);
}

TEST_SUITE_END();

// Copyright 2026 The evkb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "evkb/kb/store.hpp"
#include "evkb/selection/features.hpp"
#include "fixtures.hpp"

namespace evkb::kb {
namespace {

using evkb::testing::TempDir;

Clock fixed_clock() {
  auto counter = std::make_shared<int>(0);
  return [counter] { return "2026-01-01T00:00:" + std::to_string(10 + (*counter)++) + "Z"; };
}

// A two-candidate event followed by the Table V reports, in key order so
// record i is candidate i.
std::vector<events::CandidateQuintuple> pool() {
  std::vector<events::CandidateQuintuple> out;
  const events::EventKey key{"google", "buy", "youtube"};
  for (int i = 0; i < 2; ++i) {
    auto c = evkb::testing::make_candidate(key, i == 0 ? "1650000000" : "1600000000",
                                           {make_date(2006, 10, 1), Granularity::month},
                                           make_date(2006, 10, 10 + i), "g" + std::to_string(i));
    c.candidate_id = key.to_string() + "~r" + std::to_string(i);
    out.push_back(c);
  }
  for (auto& c : evkb::testing::table5_candidates()) out.push_back(std::move(c));
  return out;
}

std::size_t accepted_in(const std::vector<KBRecord>& records, const std::string& event) {
  std::size_t n = 0;
  for (const auto& r : records) n += r.event_key == event && r.status == Status::accepted;
  return n;
}

TEST(BuildRecordsTest, BaselineConfidenceWithoutModel) {
  const auto records = build_records(pool(), nullptr, 0.3);
  ASSERT_EQ(records.size(), 10u);
  const auto& first = records[2];
  EXPECT_EQ(first.record_id, "oracle~buy~peoplesoft~r0");
  EXPECT_EQ(first.event_key, "oracle~buy~peoplesoft");
  EXPECT_EQ(first.methods, std::vector<std::string>{"earliest"});
  EXPECT_DOUBLE_EQ(first.confidence, 1.0);
  EXPECT_EQ(first.status, Status::pending);
  EXPECT_EQ(first.provenance, std::vector<std::string>{first.quintuple.sentence_id});
  // $20B, 2007 is the latest report; the $7.7B pair is the most frequent.
  EXPECT_EQ(records[9].methods, std::vector<std::string>{"latest"});
  EXPECT_EQ(records[3].methods, std::vector<std::string>{"frequent"});
  EXPECT_DOUBLE_EQ(records[5].confidence, 0.0);
  EXPECT_TRUE(records[5].methods.empty());
}

TEST(BuildRecordsTest, ModelConfidenceIsTheScore) {
  learning::ForestParams params;
  params.n_trees = 5;
  params.min_leaf = 1;
  const auto candidates = pool();
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (const auto& event : events::split_by_event(candidates)) {
    for (const auto& c : event) {
      x.push_back(selection::extract_features(c, event).encode());
      y.push_back(c.value.amount == *Decimal::parse("10300000000") ? 1.0 : 0.0);
    }
  }
  const auto model =
      learning::train_forest(x, y, selection::encoded_feature_names(), params);
  const auto records = build_records(candidates, &model, 0.3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_DOUBLE_EQ(records[i].confidence, model.predict(x[i]));
  }
  // Supervised flag only on gamma-passing argmax picks.
  std::size_t flagged = 0;
  for (const auto& r : records) {
    for (const auto& m : r.methods) flagged += m == "supervised";
  }
  EXPECT_LE(flagged, 2u);
  EXPECT_EQ(build_records(candidates, &model, 1.01).size(), records.size());
}

TEST(KnowledgeStoreTest, AcceptRejectsSiblings) {
  TempDir dir;
  KnowledgeStore store(build_records(pool(), nullptr, 0.3), dir / "j.log", dir / "s.json",
                       fixed_clock());
  store.decide("oracle~buy~peoplesoft~r3", Action::reject, "ann");
  const auto r = store.decide("oracle~buy~peoplesoft~r5", Action::accept, "bob");
  EXPECT_EQ(r.status, Status::accepted);
  EXPECT_EQ(r.decided_by, "bob");
  EXPECT_EQ(r.decided_at, "2026-01-01T00:00:11Z");
  const auto r3 = *store.find("oracle~buy~peoplesoft~r3");
  EXPECT_EQ(r3.decided_by, "ann");
  for (const auto& c : store.candidates("oracle~buy~peoplesoft")) {
    if (c.record_id != r.record_id) {
      EXPECT_EQ(c.status, Status::rejected);
    }
  }
  EXPECT_EQ(store.find("google~buy~youtube~r0")->status, Status::pending);
  EXPECT_THROW(store.decide("oracle~buy~peoplesoft~r5", Action::reject, "x"), ConflictError);
  EXPECT_THROW(store.decide("oracle~buy~peoplesoft~r0", Action::accept, "x"), ConflictError);
  EXPECT_THROW(store.decide("nope", Action::accept, "x"), NotFoundError);
  EXPECT_FALSE(store.find("nope").has_value());
  EXPECT_THROW(store.candidates("a~b~c"), NotFoundError);
}

TEST(KnowledgeStoreTest, QueriesRankByConfidence) {
  TempDir dir;
  KnowledgeStore store(build_records(pool(), nullptr, 0.3), dir / "j.log", dir / "s.json");
  const auto ranked = store.candidates("oracle~buy~peoplesoft");
  ASSERT_EQ(ranked.size(), 8u);
  EXPECT_EQ(ranked[0].record_id, "oracle~buy~peoplesoft~r0");
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].confidence, ranked[i].confidence);
  }
  const auto objects = store.query_objects("oracle", "buy");
  ASSERT_EQ(objects.size(), 1u);
  EXPECT_EQ(objects[0].first, "peoplesoft");
  EXPECT_DOUBLE_EQ(objects[0].second, 1.0);
  EXPECT_TRUE(store.query_objects("oracle", "sell").empty());
}

TEST(KnowledgeStoreTest, RejectsDuplicateIds) {
  TempDir dir;
  auto records = build_records(pool(), nullptr, 0.3);
  records.push_back(records[0]);
  EXPECT_THROW(KnowledgeStore(records, dir / "j.log", dir / "s.json"), DataError);
}

// Random decisions against the live store; a store rebuilt from the same
// files after each step must agree with it.
TEST(KnowledgeStoreTest, ReplayReproducesLiveState) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    TempDir dir;
    const auto records = build_records(pool(), nullptr, 0.3);
    KnowledgeStore live(records, dir / "j.log", dir / "s.json", fixed_clock());
    for (int step = 0; step < 12; ++step) {
      const auto& target = records[rng() % records.size()].record_id;
      const Action action = rng() % 2 == 0 ? Action::accept : Action::reject;
      try {
        live.decide(target, action, "c" + std::to_string(step));
      } catch (const ConflictError&) {
      }
      if (rng() % 5 == 0) live.compact();
      KnowledgeStore replayed(records, dir / "j.log", dir / "s.json", fixed_clock());
      EXPECT_EQ(replayed.records(), live.records());
      EXPECT_LE(accepted_in(live.records(), "oracle~buy~peoplesoft"), 1u);
      EXPECT_LE(accepted_in(live.records(), "google~buy~youtube"), 1u);
    }
  }
}

TEST(KnowledgeStoreTest, TornLastLineIsIgnored) {
  TempDir dir;
  const auto records = build_records(pool(), nullptr, 0.3);
  std::vector<KBRecord> expected;
  {
    KnowledgeStore store(records, dir / "j.log", dir / "s.json", fixed_clock());
    store.decide("google~buy~youtube~r0", Action::accept, "ann");
    expected = store.records();
  }
  { std::ofstream(dir / "j.log", std::ios::app) << R"({"seq":2,"record_id":"oracle~buy~pe)"; }
  Diagnostics diags;
  KnowledgeStore store(records, dir / "j.log", dir / "s.json", fixed_clock(), &diags);
  EXPECT_EQ(store.records(), expected);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].line, 2u);
  // The torn tail is cut so later appends start on a fresh line.
  store.decide("oracle~buy~peoplesoft~r1", Action::accept, "bob");
  KnowledgeStore again(records, dir / "j.log", dir / "s.json", fixed_clock(), &diags);
  EXPECT_EQ(again.records(), store.records());
  EXPECT_EQ(diags.size(), 1u);
}

TEST(KnowledgeStoreTest, CrashBetweenSnapshotAndTruncation) {
  TempDir dir;
  const auto records = build_records(pool(), nullptr, 0.3);
  KnowledgeStore store(records, dir / "j.log", dir / "s.json", fixed_clock());
  store.decide("oracle~buy~peoplesoft~r2", Action::reject, "ann");
  store.decide("oracle~buy~peoplesoft~r1", Action::accept, "ann");
  std::filesystem::copy_file(dir / "j.log", dir / "j.bak");
  store.compact();
  EXPECT_EQ(std::filesystem::file_size(dir / "j.log"), 0u);
  // Restore the journal as if truncation never happened.
  std::filesystem::copy_file(dir / "j.bak", dir / "j.log",
                             std::filesystem::copy_options::overwrite_existing);
  Diagnostics diags;
  KnowledgeStore replayed(records, dir / "j.log", dir / "s.json", fixed_clock(), &diags);
  EXPECT_EQ(replayed.records(), store.records());
  EXPECT_TRUE(diags.empty());
}

TEST(KnowledgeStoreTest, ConcurrentAcceptsLeaveOneWinner) {
  for (int round = 0; round < 10; ++round) {
    TempDir dir;
    const auto records = build_records(pool(), nullptr, 0.3);
    KnowledgeStore store(records, dir / "j.log", dir / "s.json");
    std::atomic<int> wins{0};
    std::atomic<int> conflicts{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&, i] {
        try {
          store.decide("oracle~buy~peoplesoft~r" + std::to_string(i), Action::accept,
                       "t" + std::to_string(i));
          ++wins;
        } catch (const ConflictError&) {
          ++conflicts;
        }
        store.candidates("oracle~buy~peoplesoft");
      });
    }
    for (auto& t : threads) t.join();
    EXPECT_EQ(wins.load(), 1);
    EXPECT_EQ(conflicts.load(), 7);
    EXPECT_EQ(accepted_in(store.records(), "oracle~buy~peoplesoft"), 1u);
    KnowledgeStore replayed(records, dir / "j.log", dir / "s.json");
    EXPECT_EQ(replayed.records(), store.records());
  }
}

TEST(KnowledgeStoreTest, ActionNames) {
  EXPECT_EQ(parse_action("accept"), Action::accept);
  EXPECT_EQ(parse_action("reject"), Action::reject);
  EXPECT_FALSE(parse_action("maybe"));
  EXPECT_EQ(status_name(Status::accepted), "accepted");
  EXPECT_EQ(system_clock_now().size(), 20u);
}

}  // namespace
}  // namespace evkb::kb

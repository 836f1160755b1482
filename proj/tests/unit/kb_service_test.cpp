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

#include <httplib.h>

#include <fstream>
#include <thread>

#include "evkb/annotate/annotator.hpp"
#include "evkb/io/records.hpp"
#include "evkb/kb/service.hpp"
#include "fixtures.hpp"

namespace evkb::kb {
namespace {

using evkb::testing::TempDir;
using json = nlohmann::json;

// A `serve --data` directory built from the three Google / YouTube reports.
void write_service_dir(const std::filesystem::path& dir) {
  oee::write_ontology(evkb::testing::shipped_ontology(), dir / "ontology.jsonl");
  evkb::testing::fixture_repository().save(dir / "entities.json");
  const auto docs = evkb::testing::table1_documents();
  {
    std::ofstream out(dir / "corpus.jsonl");
    for (const auto& d : docs) out << corpus::serialize_document(d) << '\n';
  }
  annotate::Annotator annotator(evkb::testing::shipped_ontology(),
                                evkb::testing::fixture_repository(), {true, true, false});
  std::vector<json> lines;
  for (const auto& group : events::group_sentences(annotator.annotate_corpus(docs))) {
    for (const auto& c : events::generate_candidates(group)) lines.push_back(io::to_json(c));
  }
  io::write_lines(dir / "candidates.jsonl", lines);
}

class ApiServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    write_service_dir(dir_.path());
    data_ = load_service_data(dir_.path(), 0.3);
    api_ = std::make_unique<ApiService>(*data_.store, data_.repository, data_.ontology,
                                        data_.corpus_path);
  }

  TempDir dir_;
  ServiceData data_;
  std::unique_ptr<ApiService> api_;
};

constexpr const char* kEvent = "google~buy~youtube";

TEST_F(ApiServiceTest, Entities) {
  auto r = api_->entities("you");
  EXPECT_EQ(r.status, 200);
  ASSERT_EQ(r.body.size(), 1u);
  EXPECT_EQ(r.body[0]["entity_id"], "youtube");
  EXPECT_EQ(api_->entities("zzz").body, json::array());
  EXPECT_EQ(api_->entities(std::nullopt).status, 400);
}

TEST_F(ApiServiceTest, RelationsAndEvents) {
  const auto relations = api_->relations();
  EXPECT_EQ(relations.status, 200);
  EXPECT_NE(std::find(relations.body.begin(), relations.body.end(), "buy"), relations.body.end());

  const auto events = api_->events("google", "buy");
  EXPECT_EQ(events.status, 200);
  ASSERT_EQ(events.body.size(), 1u);
  EXPECT_EQ(events.body[0]["object"], "youtube");
  EXPECT_EQ(events.body[0]["event"], kEvent);
  EXPECT_EQ(events.body[0]["name"], "YouTube");
  EXPECT_EQ(api_->events("google", std::nullopt).status, 400);
  EXPECT_EQ(api_->events("nobody", "buy").body, json::array());
}

TEST_F(ApiServiceTest, CandidatesAndDecisions) {
  const auto candidates = api_->candidates(kEvent);
  ASSERT_EQ(candidates.status, 200);
  // Three reports, one sentence each with one date or the publication
  // date, plus the $1 billion paid for AOL in the first.
  ASSERT_GE(candidates.body.size(), 3u);
  EXPECT_EQ(api_->candidates("a~b~c").status, 404);

  const std::string first = candidates.body[0]["record_id"];
  const std::string second = candidates.body[1]["record_id"];
  auto r = api_->decision(first, R"({"action":"accept","curator":"ann"})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["status"], "accepted");
  EXPECT_EQ(r.body["decided_by"], "ann");
  EXPECT_EQ(api_->decision(first, R"({"action":"reject","curator":"bob"})").status, 409);
  EXPECT_EQ(api_->decision(second, R"({"action":"accept","curator":"bob"})").status, 409);
  EXPECT_EQ(api_->decision("missing", R"({"action":"accept","curator":"bob"})").status, 404);
  EXPECT_EQ(api_->decision(second, "not json").status, 400);
  EXPECT_EQ(api_->decision(second, R"({"action":"maybe","curator":"bob"})").status, 400);
  EXPECT_EQ(api_->decision(second, R"({"action":"accept"})").status, 400);

  std::size_t accepted = 0;
  for (const auto& c : api_->candidates(kEvent).body) accepted += c["status"] == "accepted";
  EXPECT_EQ(accepted, 1u);

  // Decisions survive a reload from disk.
  auto reloaded = load_service_data(dir_.path(), 0.3);
  EXPECT_EQ(reloaded.store->records(), data_.store->records());
}

TEST_F(ApiServiceTest, Provenance) {
  const auto candidates = api_->candidates(kEvent);
  for (const auto& c : candidates.body) {
    const std::string id = c["record_id"];
    const auto r = api_->provenance(id);
    ASSERT_EQ(r.status, 200);
    ASSERT_EQ(r.body.size(), 1u);
    EXPECT_EQ(r.body[0]["sentence_id"], c["quintuple"]["sentence_id"]);
    EXPECT_EQ(r.body[0]["text"], c["quintuple"]["text"]);
    EXPECT_EQ(r.body[0]["doc_id"], c["quintuple"]["doc_id"]);
  }
  EXPECT_EQ(api_->provenance("missing").status, 404);
}

TEST_F(ApiServiceTest, MissingCorpusIsAServerErrorAndKeepsTheRecord) {
  const std::string id = api_->candidates(kEvent).body[0]["record_id"];
  const auto before = data_.store->find(id);
  std::filesystem::remove(dir_ / "corpus.jsonl");
  const auto r = api_->provenance(id);
  EXPECT_EQ(r.status, 500);
  EXPECT_TRUE(r.body.contains("error"));
  EXPECT_EQ(data_.store->find(id), before);
}

TEST_F(ApiServiceTest, ServesOverHttp) {
  httplib::Server server;
  api_->mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/api/entities?q=goo");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(json::parse(res->body)[0]["entity_id"], "google");

  res = client.Get("/api/events?subject=google&relation=buy");
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body)[0]["event"], kEvent);

  res = client.Get(std::string("/api/events/") + kEvent + "/candidates");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const std::string id = json::parse(res->body)[0]["record_id"];

  const std::string decide = "/api/records/" + id + "/decision";
  res = client.Post(decide, R"({"action":"accept","curator":"ann"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Post(decide, R"({"action":"accept","curator":"ann"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 409);
  res = client.Post(decide, "{", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = client.Get("/api/records/" + id + "/provenance");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Get("/api/records/nope/provenance");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  res = client.Get("/api/relations");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);

  server.stop();
  thread.join();
}

TEST(LoadServiceDataTest, MissingFilesAreDataErrors) {
  TempDir dir;
  EXPECT_THROW(load_service_data(dir.path(), 0.3), DataError);
}

}  // namespace
}  // namespace evkb::kb

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

#include "evkb/kb/service.hpp"

#include <httplib.h>

#include "evkb/corpus/corpus.hpp"
#include "evkb/io/records.hpp"

namespace evkb::kb {
namespace {

using json = nlohmann::json;

ApiResponse error(int status, const std::string& message) {
  return {status, json{{"error", message}}};
}

template <typename F>
ApiResponse guarded(F&& handler) {
  try {
    return handler();
  } catch (const NotFoundError& e) {
    return error(404, e.what());
  } catch (const ConflictError& e) {
    return error(409, e.what());
  } catch (const UsageError& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

json record_json(const KBRecord& r) {
  json j = {{"record_id", r.record_id},
            {"event", r.event_key},
            {"status", status_name(r.status)},
            {"confidence", r.confidence},
            {"methods", r.methods},
            {"provenance", r.provenance},
            {"quintuple", io::to_json(r.quintuple)}};
  j["decided_at"] = r.decided_at ? json(*r.decided_at) : json(nullptr);
  j["decided_by"] = r.decided_by ? json(*r.decided_by) : json(nullptr);
  return j;
}

ApiService::ApiService(KnowledgeStore& store, const entities::EntityRepository& repository,
                       const oee::Ontology& ontology, std::filesystem::path corpus_path)
    : store_(store),
      repository_(repository),
      ontology_(ontology),
      corpus_path_(std::move(corpus_path)) {}

ApiResponse ApiService::entities(const std::optional<std::string>& prefix) const {
  return guarded([&] {
    if (!prefix) throw UsageError("missing query parameter q");
    json out = json::array();
    for (const auto* r : repository_.search_prefix(*prefix)) {
      out.push_back({{"entity_id", r->entity_id},
                     {"name", r->canonical_name},
                     {"surface_forms", r->surface_forms},
                     {"uris", r->uris},
                     {"has_description", r->has_description},
                     {"prominence", r->prominence}});
    }
    return ApiResponse{200, out};
  });
}

ApiResponse ApiService::relations() const {
  return guarded([&] { return ApiResponse{200, json(ontology_.predicate_classes())}; });
}

ApiResponse ApiService::events(const std::optional<std::string>& subject,
                               const std::optional<std::string>& relation) const {
  return guarded([&] {
    if (!subject || !relation) throw UsageError("subject and relation are required");
    json out = json::array();
    for (const auto& [object, confidence] : store_.query_objects(*subject, *relation)) {
      json entry = {{"object", object},
                    {"confidence", confidence},
                    {"event", events::EventKey{*subject, *relation, object}.to_string()}};
      if (const auto* r = repository_.find(object)) entry["name"] = r->canonical_name;
      out.push_back(std::move(entry));
    }
    return ApiResponse{200, out};
  });
}

ApiResponse ApiService::candidates(std::string_view event_key) const {
  return guarded([&] {
    json out = json::array();
    for (const auto& r : store_.candidates(event_key)) out.push_back(record_json(r));
    return ApiResponse{200, out};
  });
}

ApiResponse ApiService::decision(std::string_view record_id, std::string_view body) {
  return guarded([&] {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception&) {
      throw UsageError("request body is not JSON");
    }
    if (!j.is_object() || !j.contains("action") || !j["action"].is_string()) {
      throw UsageError("missing action");
    }
    auto action = parse_action(j["action"].get<std::string>());
    if (!action) throw UsageError("action must be accept or reject");
    const std::string curator =
        j.contains("curator") && j["curator"].is_string() ? j["curator"].get<std::string>() : "";
    if (curator.empty()) throw UsageError("missing curator");
    return ApiResponse{200, record_json(store_.decide(record_id, *action, curator))};
  });
}

ApiResponse ApiService::provenance(std::string_view record_id) const {
  return guarded([&] {
    auto record = store_.find(record_id);
    if (!record) throw NotFoundError("unknown record: " + std::string(record_id));
    if (!std::filesystem::exists(corpus_path_)) {
      throw DataError("corpus file unavailable: " + corpus_path_.string());
    }
    const auto& q = record->quintuple;
    corpus::CorpusReader reader(corpus_path_);
    json out = json::array();
    while (auto doc = reader.next()) {
      if (doc->doc_id != q.doc_id) continue;
      std::string text = q.sentence_text;
      for (const auto& s : corpus::segment_sentences(*doc)) {
        if (s.sentence_id == q.sentence_id) text = s.text;
      }
      out.push_back({{"sentence_id", q.sentence_id},
                     {"text", text},
                     {"doc_id", doc->doc_id},
                     {"title", doc->title},
                     {"published", format_iso_date(doc->published)}});
      break;
    }
    if (out.empty()) throw DataError("document " + q.doc_id + " not found in corpus");
    return ApiResponse{200, out};
  });
}

void ApiService::mount(httplib::Server& server) {
  server.Get("/api/entities", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, entities(param(req, "q")));
  });
  server.Get("/api/relations", [this](const httplib::Request&, httplib::Response& res) {
    send(res, relations());
  });
  server.Get("/api/events", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, events(param(req, "subject"), param(req, "relation")));
  });
  server.Get(R"(/api/events/([^/]+)/candidates)",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, candidates(req.matches[1].str()));
             });
  server.Post(R"(/api/records/([^/]+)/decision)",
              [this](const httplib::Request& req, httplib::Response& res) {
                send(res, decision(req.matches[1].str(), req.body));
              });
  server.Get(R"(/api/records/([^/]+)/provenance)",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, provenance(req.matches[1].str()));
             });
}

ServiceData load_service_data(const std::filesystem::path& dir, double gamma,
                              Diagnostics* diagnostics) {
  ServiceData data;
  data.ontology = oee::read_ontology(dir / "ontology.jsonl");
  data.repository = entities::EntityRepository::load(dir / "entities.json");
  if (std::filesystem::exists(dir / "model.json")) {
    data.model = learning::ForestModel::load(dir / "model.json");
  }
  const auto candidates = io::read_candidates(dir / "candidates.jsonl", diagnostics);
  auto records = build_records(candidates, data.model ? &*data.model : nullptr, gamma);
  data.store = std::make_unique<KnowledgeStore>(std::move(records), dir / "journal.jsonl",
                                                dir / "snapshot.json", system_clock_now,
                                                diagnostics);
  data.corpus_path = dir / "corpus.jsonl";
  return data;
}

}  // namespace evkb::kb

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

#ifndef EVKB_KB_SERVICE_HPP_
#define EVKB_KB_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "evkb/entities/repository.hpp"
#include "evkb/kb/store.hpp"
#include "evkb/learning/forest.hpp"
#include "evkb/oee/ontology.hpp"

namespace httplib {
class Server;
}

namespace evkb::kb {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Request handlers behind the curator HTTP API. Each returns the status
// code and JSON body; errors come back as {"error": message}.
class ApiService {
 public:
  ApiService(KnowledgeStore& store, const entities::EntityRepository& repository,
             const oee::Ontology& ontology, std::filesystem::path corpus_path);

  // GET /api/entities?q=<prefix>
  ApiResponse entities(const std::optional<std::string>& prefix) const;
  // GET /api/relations
  ApiResponse relations() const;
  // GET /api/events?subject=<id>&relation=<class>
  ApiResponse events(const std::optional<std::string>& subject,
                     const std::optional<std::string>& relation) const;
  // GET /api/events/<key>/candidates
  ApiResponse candidates(std::string_view event_key) const;
  // POST /api/records/<id>/decision {"action": "accept"|"reject", "curator": id}
  ApiResponse decision(std::string_view record_id, std::string_view body);
  // GET /api/records/<id>/provenance
  ApiResponse provenance(std::string_view record_id) const;

  void mount(httplib::Server& server);

 private:
  KnowledgeStore& store_;
  const entities::EntityRepository& repository_;
  const oee::Ontology& ontology_;
  std::filesystem::path corpus_path_;
};

nlohmann::json record_json(const KBRecord& record);

// Everything `serve --data DIR` needs: ontology.jsonl, entities.json,
// candidates.jsonl, corpus.jsonl, optional model.json; decisions persist in
// journal.jsonl and snapshot.json.
struct ServiceData {
  oee::Ontology ontology;
  entities::EntityRepository repository;
  std::optional<learning::ForestModel> model;
  std::unique_ptr<KnowledgeStore> store;
  std::filesystem::path corpus_path;
};

ServiceData load_service_data(const std::filesystem::path& dir, double gamma,
                              Diagnostics* diagnostics = nullptr);

}  // namespace evkb::kb

#endif  // EVKB_KB_SERVICE_HPP_

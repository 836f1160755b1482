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

#ifndef EVKB_KB_STORE_HPP_
#define EVKB_KB_STORE_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evkb/core/error.hpp"
#include "evkb/events/events.hpp"
#include "evkb/learning/forest.hpp"

namespace evkb::kb {

enum class Status { pending, accepted, rejected };
enum class Action { accept, reject };

std::string_view status_name(Status status);
std::optional<Action> parse_action(std::string_view name);

struct KBRecord {
  std::string record_id;
  std::string event_key;
  events::CandidateQuintuple quintuple;
  double confidence = 0.0;
  std::vector<std::string> methods;  // selectors that picked this candidate
  Status status = Status::pending;
  std::vector<std::string> provenance;  // sentence ids
  std::optional<std::string> decided_at;
  std::optional<std::string> decided_by;

  friend bool operator==(const KBRecord&, const KBRecord&) = default;
};

// One record per candidate. With a model, confidence is the supervised
// score and the argmax is flagged "supervised" when it reaches gamma;
// without one, baseline picks get 1.0 and everything else 0.
std::vector<KBRecord> build_records(const std::vector<events::CandidateQuintuple>& candidates,
                                    const learning::ForestModel* model, double gamma);

using Clock = std::function<std::string()>;
// UTC ISO-8601 with seconds.
std::string system_clock_now();

// Curation state over a fixed set of records. Decisions go to an
// append-only journal before they touch memory; a snapshot compacts the
// journal. Reads take a shared lock, decisions an exclusive one.
class KnowledgeStore {
 public:
  // Loads `snapshot` (if present) and replays `journal` on top of
  // `records`. A torn last journal line is ignored with a diagnostic.
  KnowledgeStore(std::vector<KBRecord> records, std::filesystem::path journal,
                 std::filesystem::path snapshot, Clock clock = system_clock_now,
                 Diagnostics* diagnostics = nullptr);

  // Accepting rejects every pending sibling of the same event. Throws
  // NotFoundError for unknown ids and ConflictError for decided records.
  KBRecord decide(std::string_view record_id, Action action, std::string_view curator);

  std::optional<KBRecord> find(std::string_view record_id) const;
  // Ranked by confidence, then reporting order. Throws NotFoundError.
  std::vector<KBRecord> candidates(std::string_view event_key) const;
  // Distinct objects of (subject, class) events with their best confidence,
  // best first.
  std::vector<std::pair<std::string, double>> query_objects(std::string_view subject_id,
                                                           std::string_view predicate_class) const;
  std::vector<KBRecord> records() const;

  // Writes the snapshot atomically and truncates the journal.
  void compact();

 private:
  struct Decision {
    std::size_t seq = 0;
    std::string record_id;
    Action action = Action::accept;
    std::string curator;
    std::string at;
  };

  void check(const KBRecord& record) const;
  void apply(const Decision& decision);
  void replay(Diagnostics* diagnostics);

  mutable std::shared_mutex mutex_;
  std::vector<KBRecord> records_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_event_;
  std::filesystem::path journal_;
  std::filesystem::path snapshot_;
  Clock clock_;
  std::size_t seq_ = 0;
};

}  // namespace evkb::kb

#endif  // EVKB_KB_STORE_HPP_

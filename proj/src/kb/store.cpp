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

#include "evkb/kb/store.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "evkb/selection/selection.hpp"

namespace evkb::kb {
namespace {

using json = nlohmann::json;

std::string_view action_name(Action action) {
  return action == Action::accept ? "accept" : "reject";
}

std::optional<Status> parse_status(std::string_view name) {
  for (Status s : {Status::pending, Status::accepted, Status::rejected}) {
    if (status_name(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::pending:
      return "pending";
    case Status::accepted:
      return "accepted";
    case Status::rejected:
      return "rejected";
  }
  return "pending";
}

std::optional<Action> parse_action(std::string_view name) {
  if (name == "accept") return Action::accept;
  if (name == "reject") return Action::reject;
  return std::nullopt;
}

std::string system_clock_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::vector<KBRecord> build_records(const std::vector<events::CandidateQuintuple>& candidates,
                                    const learning::ForestModel* model, double gamma) {
  std::vector<KBRecord> out;
  for (const auto& event : events::split_by_event(candidates)) {
    std::vector<double> confidence(event.size(), 0.0);
    std::vector<std::vector<std::string>> methods(event.size());
    auto flag = [&](const events::CandidateQuintuple& pick, std::string_view name) {
      for (std::size_t i = 0; i < event.size(); ++i) {
        if (event[i].candidate_id == pick.candidate_id) methods[i].emplace_back(name);
      }
    };
    for (auto method : {selection::Method::earliest, selection::Method::latest,
                        selection::Method::frequent}) {
      flag(*selection::select(event, method).chosen, selection::method_name(method));
    }
    if (model != nullptr) {
      confidence = selection::score_candidates(event, *model);
      const auto picked = selection::select_supervised(event, *model, gamma);
      if (picked.chosen) flag(*picked.chosen, "supervised");
    } else {
      for (std::size_t i = 0; i < event.size(); ++i) {
        if (!methods[i].empty()) confidence[i] = 1.0;
      }
    }
    for (std::size_t i = 0; i < event.size(); ++i) {
      KBRecord r;
      r.record_id = event[i].candidate_id;
      r.event_key = event[i].key.to_string();
      r.quintuple = event[i];
      r.confidence = confidence[i];
      r.methods = std::move(methods[i]);
      r.provenance = {event[i].sentence_id};
      out.push_back(std::move(r));
    }
  }
  return out;
}

KnowledgeStore::KnowledgeStore(std::vector<KBRecord> records, std::filesystem::path journal,
                               std::filesystem::path snapshot, Clock clock,
                               Diagnostics* diagnostics)
    : records_(std::move(records)),
      journal_(std::move(journal)),
      snapshot_(std::move(snapshot)),
      clock_(std::move(clock)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!by_id_.emplace(r.record_id, i).second) {
      throw DataError("duplicate record id: " + r.record_id);
    }
    by_event_[r.event_key].push_back(i);
  }
  replay(diagnostics);
}

void KnowledgeStore::replay(Diagnostics* diagnostics) {
  if (!snapshot_.empty() && std::filesystem::exists(snapshot_)) {
    std::ifstream in(snapshot_, std::ios::binary);
    json j;
    try {
      j = json::parse(in);
      seq_ = j.at("seq").get<std::size_t>();
      for (const auto& entry : j.at("records")) {
        auto it = by_id_.find(entry.at("id").get<std::string>());
        if (it == by_id_.end()) throw DataError("snapshot names unknown record");
        auto status = parse_status(entry.at("status").get<std::string>());
        if (!status) throw DataError("snapshot has invalid status");
        KBRecord& r = records_[it->second];
        r.status = *status;
        if (entry.contains("at")) r.decided_at = entry.at("at").get<std::string>();
        if (entry.contains("by")) r.decided_by = entry.at("by").get<std::string>();
      }
    } catch (const json::exception& e) {
      throw DataError("unreadable snapshot " + snapshot_.string() + ": " + e.what());
    }
  }
  if (!std::filesystem::exists(journal_)) return;
  std::ifstream in(journal_, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::size_t valid_end = 0;
  while (pos < content.size()) {
    const std::size_t nl = content.find('\n', pos);
    ++line_no;
    if (nl == std::string::npos) {
      // No newline: the write was cut short.
      report(diagnostics, {journal_.string(), line_no, "ignored torn journal entry"});
      break;
    }
    const std::string line = content.substr(pos, nl - pos);
    pos = nl + 1;
    try {
      const json j = json::parse(line);
      Decision d;
      d.seq = j.at("seq").get<std::size_t>();
      d.record_id = j.at("record_id").get<std::string>();
      auto action = parse_action(j.at("action").get<std::string>());
      if (!action) throw DataError("invalid action");
      d.action = *action;
      d.curator = j.at("curator").get<std::string>();
      d.at = j.at("at").get<std::string>();
      if (d.seq > seq_) {
        auto it = by_id_.find(d.record_id);
        if (it == by_id_.end()) throw NotFoundError("unknown record " + d.record_id);
        check(records_[it->second]);
        apply(d);
      }
    } catch (const std::exception& e) {
      report(diagnostics, {journal_.string(), line_no, std::string("skipped journal entry: ") + e.what()});
    }
    valid_end = pos;
  }
  if (valid_end < content.size()) std::filesystem::resize_file(journal_, valid_end);
}

void KnowledgeStore::check(const KBRecord& record) const {
  if (record.status != Status::pending) {
    throw ConflictError("record " + record.record_id + " is already " +
                        std::string(status_name(record.status)));
  }
}

void KnowledgeStore::apply(const Decision& d) {
  KBRecord& r = records_[by_id_.at(d.record_id)];
  r.status = d.action == Action::accept ? Status::accepted : Status::rejected;
  r.decided_at = d.at;
  r.decided_by = d.curator;
  if (d.action == Action::accept) {
    for (std::size_t i : by_event_.at(r.event_key)) {
      KBRecord& sibling = records_[i];
      if (sibling.record_id == r.record_id || sibling.status != Status::pending) continue;
      sibling.status = Status::rejected;
      sibling.decided_at = d.at;
      sibling.decided_by = d.curator;
    }
  }
  seq_ = std::max(seq_, d.seq);
}

KBRecord KnowledgeStore::decide(std::string_view record_id, Action action,
                                std::string_view curator) {
  std::unique_lock lock(mutex_);
  auto it = by_id_.find(record_id);
  if (it == by_id_.end()) throw NotFoundError("unknown record: " + std::string(record_id));
  check(records_[it->second]);
  // An accepted sibling means the event is settled.
  for (std::size_t i : by_event_.at(records_[it->second].event_key)) {
    if (records_[i].status == Status::accepted) {
      throw ConflictError("event already has an accepted record: " + records_[i].record_id);
    }
  }
  Decision d{seq_ + 1, std::string(record_id), action, std::string(curator), clock_()};
  {
    std::ofstream out(journal_, std::ios::binary | std::ios::app);
    const json j = {{"seq", d.seq},
                    {"record_id", d.record_id},
                    {"action", action_name(d.action)},
                    {"curator", d.curator},
                    {"at", d.at}};
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("cannot append to journal " + journal_.string());
  }
  apply(d);
  return records_[it->second];
}

std::optional<KBRecord> KnowledgeStore::find(std::string_view record_id) const {
  std::shared_lock lock(mutex_);
  auto it = by_id_.find(record_id);
  if (it == by_id_.end()) return std::nullopt;
  return records_[it->second];
}

std::vector<KBRecord> KnowledgeStore::candidates(std::string_view event_key) const {
  std::shared_lock lock(mutex_);
  auto it = by_event_.find(event_key);
  if (it == by_event_.end()) throw NotFoundError("unknown event: " + std::string(event_key));
  std::vector<KBRecord> out;
  for (std::size_t i : it->second) out.push_back(records_[i]);
  std::stable_sort(out.begin(), out.end(), [](const KBRecord& a, const KBRecord& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return selection::reported_before(a.quintuple, b.quintuple);
  });
  return out;
}

std::vector<std::pair<std::string, double>> KnowledgeStore::query_objects(
    std::string_view subject_id, std::string_view predicate_class) const {
  std::shared_lock lock(mutex_);
  std::map<std::string, double> best;
  for (const auto& r : records_) {
    const auto& key = r.quintuple.key;
    if (key.subject_id != subject_id || key.predicate_class != predicate_class) continue;
    auto [it, inserted] = best.try_emplace(key.object_id, r.confidence);
    if (!inserted) it->second = std::max(it->second, r.confidence);
  }
  std::vector<std::pair<std::string, double>> out(best.begin(), best.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

std::vector<KBRecord> KnowledgeStore::records() const {
  std::shared_lock lock(mutex_);
  return records_;
}

void KnowledgeStore::compact() {
  std::unique_lock lock(mutex_);
  json entries = json::array();
  for (const auto& r : records_) {
    if (r.status == Status::pending) continue;
    json e = {{"id", r.record_id}, {"status", status_name(r.status)}};
    if (r.decided_at) e["at"] = *r.decided_at;
    if (r.decided_by) e["by"] = *r.decided_by;
    entries.push_back(std::move(e));
  }
  const json j = {{"seq", seq_}, {"records", std::move(entries)}};
  std::filesystem::path tmp = snapshot_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("cannot write snapshot " + tmp.string());
  }
  std::filesystem::rename(tmp, snapshot_);
  // Entries up to seq_ are covered by the snapshot; replay skips them even
  // if truncation below does not happen.
  std::ofstream(journal_, std::ios::binary | std::ios::trunc);
}

}  // namespace evkb::kb

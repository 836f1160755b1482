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

#include "evkb/evaluation/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include <json.hpp>

namespace evkb::evaluation {
namespace {

using json = nlohmann::json;

// Ontology label for a truth predicate, accepting noun forms.
const std::string& resolve_predicate(const oee::Ontology& ontology, const std::string& label,
                                     std::string& storage) {
  if (ontology.contains(label)) return label;
  if (auto verb = ontology.noun_to_verb(label)) {
    storage = *verb;
    return storage;
  }
  throw UnknownPredicateError(label);
}

Decimal decimal_field(const json& value) {
  std::optional<Decimal> d;
  if (value.is_string()) {
    d = Decimal::parse(value.get<std::string>());
  } else if (value.is_number()) {
    d = Decimal::parse(value.dump());
  }
  if (!d) throw DataError("invalid amount: " + value.dump());
  return *d;
}

}  // namespace

std::string_view mode_name(MatchMode mode) {
  switch (mode) {
    case MatchMode::events_only:
      return "events";
    case MatchMode::strict:
      return "strict";
    case MatchMode::relaxed:
      return "relaxed";
  }
  return "relaxed";
}

std::optional<MatchMode> parse_mode(std::string_view name) {
  for (MatchMode m : {MatchMode::events_only, MatchMode::strict, MatchMode::relaxed}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

bool within_ten_percent(const Decimal& value, const Decimal& truth) {
  return (value - truth).abs() * 10 <= truth;
}

bool match_event(const events::CandidateQuintuple& extracted, const GroundTruthEvent& truth,
                 const oee::Ontology& ontology) {
  std::string storage;
  const std::string& truth_label = resolve_predicate(ontology, truth.predicate, storage);
  if (!ontology.contains(extracted.predicate_label)) {
    throw UnknownPredicateError(extracted.predicate_label);
  }
  return extracted.key.subject_id == truth.subject_id &&
         extracted.key.object_id == truth.object_id &&
         ontology.predicates_equivalent(extracted.predicate_label, truth_label);
}

bool match_attributes(const events::CandidateQuintuple& extracted, const GroundTruthEvent& truth,
                      MatchMode mode) {
  if (mode == MatchMode::events_only) return true;
  if (extracted.value.currency != truth.currency) return false;
  if (mode == MatchMode::strict) {
    return extracted.value.amount == truth.amount &&
           extracted.date.granularity <= truth.date.granularity &&
           same_at(extracted.date.date, truth.date.date, truth.date.granularity);
  }
  return within_ten_percent(extracted.value.amount, truth.amount) &&
         year_of(extracted.date.date) == year_of(truth.date.date);
}

double EvalReport::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double EvalReport::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double EvalReport::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

EvalReport& EvalReport::operator+=(const EvalReport& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

EvalReport evaluate(const std::vector<events::CandidateQuintuple>& selections,
                    const std::vector<GroundTruthEvent>& truths, MatchMode mode,
                    const oee::Ontology& ontology) {
  std::vector<const events::CandidateQuintuple*> ordered;
  for (const auto& s : selections) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const events::CandidateQuintuple* a, const events::CandidateQuintuple* b) {
                     return std::tie(a->key, a->published) < std::tie(b->key, b->published);
                   });
  std::vector<bool> used(truths.size(), false);
  EvalReport report;
  report.mode = mode;
  for (const auto* s : ordered) {
    bool matched = false;
    for (std::size_t t = 0; t < truths.size() && !matched; ++t) {
      if (used[t]) continue;
      if (match_event(*s, truths[t], ontology) && match_attributes(*s, truths[t], mode)) {
        used[t] = true;
        matched = true;
      }
    }
    if (matched) {
      ++report.tp;
    } else {
      ++report.fp;
    }
  }
  report.fn = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
  return report;
}

std::vector<GroundTruthEvent> read_ground_truth(const std::filesystem::path& path,
                                                Diagnostics* diagnostics) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read ground truth: " + path.string());
  std::vector<GroundTruthEvent> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      GroundTruthEvent t;
      t.company = j.at("company").get<std::string>();
      t.subject_id = j.at("subject").get<std::string>();
      t.predicate = j.at("predicate").get<std::string>();
      t.object_id = j.at("object").get<std::string>();
      t.amount = decimal_field(j.at("amount"));
      t.currency = j.at("currency").get<std::string>();
      auto date = parse_granular(j.at("date").get<std::string>());
      if (!date) throw DataError("invalid date");
      t.date = *date;
      if (!t.amount.is_positive()) throw DataError("amount must be positive");
      out.push_back(std::move(t));
    } catch (const std::exception& e) {
      report(diagnostics, {path.string(), line_no, std::string("skipped truth record: ") + e.what()});
    }
  }
  return out;
}

void write_ground_truth(const std::vector<GroundTruthEvent>& truths,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write ground truth: " + path.string());
  for (const auto& t : truths) {
    json j = {{"company", t.company},   {"subject", t.subject_id},
              {"predicate", t.predicate}, {"object", t.object_id},
              {"amount", t.amount.to_string()}, {"currency", t.currency},
              {"date", format_granular(t.date)}};
    out << j.dump() << '\n';
  }
}

}  // namespace evkb::evaluation

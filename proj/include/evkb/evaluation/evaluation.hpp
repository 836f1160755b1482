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

#ifndef EVKB_EVALUATION_EVALUATION_HPP_
#define EVKB_EVALUATION_EVALUATION_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/core/date.hpp"
#include "evkb/core/decimal.hpp"
#include "evkb/core/error.hpp"
#include "evkb/events/events.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::evaluation {

struct GroundTruthEvent {
  std::string company;
  std::string subject_id;
  std::string predicate;  // ontology label or mapped noun
  std::string object_id;
  Decimal amount;
  std::string currency;
  GranularDate date;

  friend bool operator==(const GroundTruthEvent&, const GroundTruthEvent&) = default;
};

enum class MatchMode { events_only, strict, relaxed };

std::string_view mode_name(MatchMode mode);  // "events", "strict", "relaxed"
std::optional<MatchMode> parse_mode(std::string_view name);

// |value - truth| <= truth / 10, computed exactly. The tolerance is relative
// to the truth, so the relation is not symmetric.
bool within_ten_percent(const Decimal& value, const Decimal& truth);

// Same subject and object, equivalent predicates. Throws
// UnknownPredicateError when either predicate is not in the ontology.
bool match_event(const events::CandidateQuintuple& extracted, const GroundTruthEvent& truth,
                 const oee::Ontology& ontology);

// strict: same amount and currency, extracted date at least as precise as
// the truth and equal at the truth's granularity.
// relaxed: same currency, within ten percent, same year.
bool match_attributes(const events::CandidateQuintuple& extracted, const GroundTruthEvent& truth,
                      MatchMode mode);

struct EvalReport {
  MatchMode mode = MatchMode::relaxed;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  double precision() const;
  double recall() const;
  double f1() const;
  EvalReport& operator+=(const EvalReport& other);
};

// One-to-one greedy matching: selections in (event key, published) order
// each take the first unmatched truth (in file order) they match.
EvalReport evaluate(const std::vector<events::CandidateQuintuple>& selections,
                    const std::vector<GroundTruthEvent>& truths, MatchMode mode,
                    const oee::Ontology& ontology);

// Line-delimited {company, subject, predicate, object, amount, currency,
// date}. Malformed lines are skipped with a diagnostic.
std::vector<GroundTruthEvent> read_ground_truth(const std::filesystem::path& path,
                                                Diagnostics* diagnostics = nullptr);
void write_ground_truth(const std::vector<GroundTruthEvent>& truths,
                        const std::filesystem::path& path);

}  // namespace evkb::evaluation

#endif  // EVKB_EVALUATION_EVALUATION_HPP_

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

#ifndef EVKB_SELECTION_SELECTION_HPP_
#define EVKB_SELECTION_SELECTION_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "evkb/events/events.hpp"
#include "evkb/learning/forest.hpp"

namespace evkb::selection {

enum class Method { earliest, latest, frequent, supervised };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

inline constexpr double kDefaultGamma = 0.3;

struct SelectionResult {
  events::EventKey key;
  std::optional<events::CandidateQuintuple> chosen;
  double confidence = 0.0;  // 1.0 for the baselines
  Method method = Method::earliest;
};

// Reporting order used for "earliest" and for every tie-break: published,
// doc_id, sentence order, predicate position, value index, date index.
bool reported_before(const events::CandidateQuintuple& a, const events::CandidateQuintuple& b);

// All selectors throw Error on an empty candidate set.
const events::CandidateQuintuple& select_earliest(
    const std::vector<events::CandidateQuintuple>& candidates);
// Maximum publication date; ties broken in reporting order.
const events::CandidateQuintuple& select_latest(
    const std::vector<events::CandidateQuintuple>& candidates);
// Most frequent (amount, currency, date at its granularity); ties broken
// by earliest reporting.
const events::CandidateQuintuple& select_most_frequent(
    const std::vector<events::CandidateQuintuple>& candidates);

// Model score of every candidate, in input order. Throws SchemaMismatchError
// if the model was trained on a different feature layout.
std::vector<double> score_candidates(const std::vector<events::CandidateQuintuple>& candidates,
                                     const learning::ForestModel& model);

// Highest-scoring candidate (reporting order on ties) if its score reaches
// gamma; confidence is that score either way.
SelectionResult select_supervised(const std::vector<events::CandidateQuintuple>& candidates,
                                  const learning::ForestModel& model, double gamma = kDefaultGamma);

// Baselines wrap their pick with confidence 1.0; supervised needs `model`.
SelectionResult select(const std::vector<events::CandidateQuintuple>& candidates, Method method,
                       const learning::ForestModel* model = nullptr,
                       double gamma = kDefaultGamma);

}  // namespace evkb::selection

#endif  // EVKB_SELECTION_SELECTION_HPP_

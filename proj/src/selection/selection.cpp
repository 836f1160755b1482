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

#include "evkb/selection/selection.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "evkb/core/error.hpp"
#include "evkb/selection/features.hpp"

namespace evkb::selection {
namespace {

using events::CandidateQuintuple;

void require_candidates(const std::vector<CandidateQuintuple>& candidates) {
  if (candidates.empty()) throw Error("selection over an empty candidate set");
}

// Reporting order without the publication date.
auto position(const CandidateQuintuple& c) {
  return std::tie(c.doc_id, c.order_index, c.predicate_offset, c.value_index, c.date_index);
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::earliest:
      return "earliest";
    case Method::latest:
      return "latest";
    case Method::frequent:
      return "frequent";
    case Method::supervised:
      return "supervised";
  }
  return "earliest";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::earliest, Method::latest, Method::frequent, Method::supervised}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool reported_before(const CandidateQuintuple& a, const CandidateQuintuple& b) {
  if (a.published != b.published) return a.published < b.published;
  return position(a) < position(b);
}

const CandidateQuintuple& select_earliest(const std::vector<CandidateQuintuple>& candidates) {
  require_candidates(candidates);
  return *std::min_element(candidates.begin(), candidates.end(), reported_before);
}

const CandidateQuintuple& select_latest(const std::vector<CandidateQuintuple>& candidates) {
  require_candidates(candidates);
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const CandidateQuintuple& a, const CandidateQuintuple& b) {
                             if (a.published != b.published) return a.published > b.published;
                             return position(a) < position(b);
                           });
}

const CandidateQuintuple& select_most_frequent(const std::vector<CandidateQuintuple>& candidates) {
  require_candidates(candidates);
  using PairKey = std::tuple<Decimal, std::string, std::string>;
  auto key_of = [](const CandidateQuintuple& c) {
    return PairKey{c.value.amount, c.value.currency, format_granular(c.date)};
  };
  std::map<PairKey, std::size_t> counts;
  for (const auto& c : candidates) ++counts[key_of(c)];
  std::size_t best = 0;
  for (const auto& [key, n] : counts) best = std::max(best, n);
  const CandidateQuintuple* pick = nullptr;
  for (const auto& c : candidates) {
    if (counts[key_of(c)] != best) continue;
    if (pick == nullptr || reported_before(c, *pick)) pick = &c;
  }
  return *pick;
}

std::vector<double> score_candidates(const std::vector<CandidateQuintuple>& candidates,
                                     const learning::ForestModel& model) {
  if (model.feature_names() != encoded_feature_names()) {
    throw SchemaMismatchError("model feature schema does not match the extractor");
  }
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates) {
    scores.push_back(model.predict(extract_features(c, candidates).encode()));
  }
  return scores;
}

SelectionResult select_supervised(const std::vector<CandidateQuintuple>& candidates,
                                  const learning::ForestModel& model, double gamma) {
  require_candidates(candidates);
  const std::vector<double> scores = score_candidates(candidates, model);
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (scores[i] > scores[best] ||
        (scores[i] == scores[best] && reported_before(candidates[i], candidates[best]))) {
      best = i;
    }
  }
  SelectionResult result;
  result.key = candidates[best].key;
  result.method = Method::supervised;
  result.confidence = scores[best];
  if (scores[best] >= gamma) result.chosen = candidates[best];
  return result;
}

SelectionResult select(const std::vector<CandidateQuintuple>& candidates, Method method,
                       const learning::ForestModel* model, double gamma) {
  if (method == Method::supervised) {
    if (model == nullptr) throw UsageError("supervised selection needs a model");
    return select_supervised(candidates, *model, gamma);
  }
  SelectionResult result;
  result.method = method;
  result.confidence = 1.0;
  switch (method) {
    case Method::earliest:
      result.chosen = select_earliest(candidates);
      break;
    case Method::latest:
      result.chosen = select_latest(candidates);
      break;
    default:
      result.chosen = select_most_frequent(candidates);
      break;
  }
  result.key = result.chosen->key;
  return result;
}

}  // namespace evkb::selection

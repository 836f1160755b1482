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

#include "evkb/learning/labeling.hpp"

#include "evkb/selection/features.hpp"

namespace evkb::learning {

std::optional<std::string> company_of(const events::EventKey& key,
                                      const std::set<std::string>& companies) {
  if (companies.contains(key.subject_id)) return key.subject_id;
  if (companies.contains(key.object_id)) return key.object_id;
  return std::nullopt;
}

std::set<std::string> truth_companies(const std::vector<evaluation::GroundTruthEvent>& truths) {
  std::set<std::string> out;
  for (const auto& t : truths) out.insert(t.company);
  return out;
}

std::vector<TrainingInstance> label_instances(
    const std::vector<std::vector<events::CandidateQuintuple>>& events,
    const std::vector<evaluation::GroundTruthEvent>& truths, const oee::Ontology& ontology) {
  const std::set<std::string> companies = truth_companies(truths);
  std::vector<TrainingInstance> out;
  for (const auto& candidates : events) {
    if (candidates.empty()) continue;
    std::vector<const evaluation::GroundTruthEvent*> event_truths;
    for (const auto& t : truths) {
      if (evaluation::match_event(candidates.front(), t, ontology)) event_truths.push_back(&t);
    }
    const std::string key = candidates.front().key.to_string();
    const std::string company = company_of(candidates.front().key, companies).value_or("");
    for (const auto& c : candidates) {
      TrainingInstance instance;
      instance.features = selection::extract_features(c, candidates).encode();
      instance.event_key = key;
      instance.company = company;
      for (const auto* t : event_truths) {
        if (evaluation::match_attributes(c, *t, evaluation::MatchMode::relaxed)) {
          instance.label = 1.0;
          break;
        }
      }
      out.push_back(std::move(instance));
    }
  }
  return out;
}

ForestModel train_on_instances(const std::vector<TrainingInstance>& instances,
                               const ForestParams& params) {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  x.reserve(instances.size());
  y.reserve(instances.size());
  for (const auto& i : instances) {
    x.push_back(i.features);
    y.push_back(i.label);
  }
  return train_forest(x, y, selection::encoded_feature_names(), params);
}

}  // namespace evkb::learning

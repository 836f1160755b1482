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

#ifndef EVKB_LEARNING_LABELING_HPP_
#define EVKB_LEARNING_LABELING_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evkb/evaluation/evaluation.hpp"
#include "evkb/events/events.hpp"
#include "evkb/learning/forest.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::learning {

struct TrainingInstance {
  std::vector<double> features;  // encoded, see selection::encoded_feature_names()
  double label = 0.0;
  std::string event_key;
  std::string company;  // empty when the event involves no tracked company
};

// Company an event is filed under: its subject if tracked, else its object.
std::optional<std::string> company_of(const events::EventKey& key,
                                      const std::set<std::string>& companies);

// Companies named in the ground truth.
std::set<std::string> truth_companies(const std::vector<evaluation::GroundTruthEvent>& truths);

// One instance per candidate. Label 1 iff the candidate matches a truth
// record of its event under relaxed attribute matching.
std::vector<TrainingInstance> label_instances(
    const std::vector<std::vector<events::CandidateQuintuple>>& events,
    const std::vector<evaluation::GroundTruthEvent>& truths, const oee::Ontology& ontology);

ForestModel train_on_instances(const std::vector<TrainingInstance>& instances,
                               const ForestParams& params);

}  // namespace evkb::learning

#endif  // EVKB_LEARNING_LABELING_HPP_

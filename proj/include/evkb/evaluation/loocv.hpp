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

#ifndef EVKB_EVALUATION_LOOCV_HPP_
#define EVKB_EVALUATION_LOOCV_HPP_

#include <map>
#include <string>
#include <vector>

#include "evkb/evaluation/evaluation.hpp"
#include "evkb/events/events.hpp"
#include "evkb/learning/forest.hpp"
#include "evkb/selection/selection.hpp"

namespace evkb::evaluation {

struct LoocvConfig {
  learning::ForestParams forest;
  double gamma = selection::kDefaultGamma;
};

using MethodReports = std::map<selection::Method, std::map<MatchMode, EvalReport>>;

// Supervised argmax of one held-out event, kept regardless of gamma.
struct ScoredPick {
  events::CandidateQuintuple candidate;
  double score = 0.0;
};

struct FoldReport {
  std::string company;
  std::size_t train_instances = 0;
  std::size_t train_positives = 0;
  std::size_t test_events = 0;
  std::size_t test_truths = 0;
  MethodReports reports;
  std::vector<ScoredPick> supervised_picks;
};

struct LoocvResult {
  std::vector<FoldReport> folds;
  MethodReports aggregate;  // sums of fold counts
};

// Leave-one-company-out: events are filed under a company (subject first,
// then object); events involving no truth company are left out. Each fold
// trains on the other companies' events and truths and evaluates all four
// methods on the held-out company. Throws UsageError with fewer than two
// companies.
LoocvResult loo_cv(const std::vector<std::vector<events::CandidateQuintuple>>& events,
                   const std::vector<GroundTruthEvent>& truths, const oee::Ontology& ontology,
                   const LoocvConfig& config);

struct GammaPoint {
  double gamma = 0.0;
  EvalReport report;  // relaxed
  std::size_t returned = 0;
};

// Supervised relaxed scores over all folds at each threshold, reusing the
// fold models' picks.
std::vector<GammaPoint> gamma_sweep(const LoocvResult& result,
                                    const std::vector<GroundTruthEvent>& truths,
                                    const oee::Ontology& ontology,
                                    const std::vector<double>& gammas);

}  // namespace evkb::evaluation

#endif  // EVKB_EVALUATION_LOOCV_HPP_

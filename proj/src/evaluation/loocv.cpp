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

#include "evkb/evaluation/loocv.hpp"

#include "evkb/core/error.hpp"
#include "evkb/learning/labeling.hpp"

namespace evkb::evaluation {
namespace {

using events::CandidateQuintuple;
using selection::Method;

constexpr MatchMode kModes[] = {MatchMode::events_only, MatchMode::strict, MatchMode::relaxed};

}  // namespace

LoocvResult loo_cv(const std::vector<std::vector<CandidateQuintuple>>& events,
                   const std::vector<GroundTruthEvent>& truths, const oee::Ontology& ontology,
                   const LoocvConfig& config) {
  const std::set<std::string> companies = learning::truth_companies(truths);
  if (companies.size() < 2) {
    throw UsageError("leave-one-out needs at least two companies in the ground truth");
  }
  std::map<std::string, std::vector<const std::vector<CandidateQuintuple>*>> by_company;
  for (const auto& e : events) {
    if (e.empty()) continue;
    if (auto company = learning::company_of(e.front().key, companies)) {
      by_company[*company].push_back(&e);
    }
  }

  LoocvResult result;
  for (const auto& company : companies) {
    FoldReport fold;
    fold.company = company;

    std::vector<std::vector<CandidateQuintuple>> train_events;
    std::vector<GroundTruthEvent> train_truths, test_truths;
    for (const auto& [other, list] : by_company) {
      if (other == company) continue;
      for (const auto* e : list) train_events.push_back(*e);
    }
    for (const auto& t : truths) (t.company == company ? test_truths : train_truths).push_back(t);
    fold.test_truths = test_truths.size();

    const auto instances = learning::label_instances(train_events, train_truths, ontology);
    fold.train_instances = instances.size();
    for (const auto& i : instances) fold.train_positives += i.label > 0.5 ? 1 : 0;
    std::optional<learning::ForestModel> model;
    if (!instances.empty()) model = learning::train_on_instances(instances, config.forest);

    std::map<Method, std::vector<CandidateQuintuple>> selections;
    const auto test_it = by_company.find(company);
    if (test_it != by_company.end()) {
      for (const auto* e : test_it->second) {
        ++fold.test_events;
        for (Method m : {Method::earliest, Method::latest, Method::frequent}) {
          selections[m].push_back(*selection::select(*e, m).chosen);
        }
        if (model) {
          const auto picked = selection::select_supervised(*e, *model, 0.0);
          fold.supervised_picks.push_back({*picked.chosen, picked.confidence});
          if (picked.confidence >= config.gamma) {
            selections[Method::supervised].push_back(*picked.chosen);
          }
        }
      }
    }
    for (Method m : {Method::earliest, Method::latest, Method::frequent, Method::supervised}) {
      for (MatchMode mode : kModes) {
        EvalReport r = evaluate(selections[m], test_truths, mode, ontology);
        fold.reports[m][mode] = r;
        auto& total = result.aggregate[m][mode];
        total.mode = mode;
        total += r;
      }
    }
    result.folds.push_back(std::move(fold));
  }
  return result;
}

std::vector<GammaPoint> gamma_sweep(const LoocvResult& result,
                                    const std::vector<GroundTruthEvent>& truths,
                                    const oee::Ontology& ontology,
                                    const std::vector<double>& gammas) {
  std::vector<GammaPoint> out;
  for (double gamma : gammas) {
    GammaPoint point;
    point.gamma = gamma;
    point.report.mode = MatchMode::relaxed;
    for (const auto& fold : result.folds) {
      std::vector<CandidateQuintuple> selected;
      for (const auto& pick : fold.supervised_picks) {
        if (pick.score >= gamma) selected.push_back(pick.candidate);
      }
      std::vector<GroundTruthEvent> fold_truths;
      for (const auto& t : truths) {
        if (t.company == fold.company) fold_truths.push_back(t);
      }
      point.returned += selected.size();
      point.report += evaluate(selected, fold_truths, MatchMode::relaxed, ontology);
    }
    out.push_back(point);
  }
  return out;
}

}  // namespace evkb::evaluation

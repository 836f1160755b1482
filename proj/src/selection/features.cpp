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

#include "evkb/selection/features.hpp"

namespace evkb::selection {

const std::array<std::string_view, kFeatureCount>& feature_names() {
  static constexpr std::array<std::string_view, kFeatureCount> names = {
      "dates_count",        "article_length",     "sentence_length",    "sentence_order",
      "values_ratio",       "correct_fin_arg",    "pred_frequency",     "predicate_tense",
      "object_has_cb_uri",  "object_has_dbp_uri", "object_has_fb_uri",  "nytc_desc_bus",
      "has_event_date",     "correct_temp_arg",   "is_noun_predicate",  "subject_has_dbp_uri",
      "subject_has_cb_uri", "subject_has_fb_uri"};
  return names;
}

const std::vector<std::string>& encoded_feature_names() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> out;
    for (auto name : feature_names()) {
      if (name == "predicate_tense") {
        for (auto t : {annotate::Tense::past, annotate::Tense::present, annotate::Tense::future,
                       annotate::Tense::unknown}) {
          out.push_back(std::string(name) + "=" + std::string(annotate::tense_name(t)));
        }
      } else {
        out.emplace_back(name);
      }
    }
    return out;
  }();
  return columns;
}

std::string_view feature_of_column(std::string_view column) {
  return column.substr(0, column.find('='));
}

std::vector<double> FeatureVector::encode() const {
  auto b = [](bool v) { return v ? 1.0 : 0.0; };
  using annotate::Tense;
  return {dates_count,
          article_length,
          sentence_length,
          sentence_order,
          values_ratio,
          b(correct_fin_arg),
          pred_frequency,
          b(predicate_tense == Tense::past),
          b(predicate_tense == Tense::present),
          b(predicate_tense == Tense::future),
          b(predicate_tense == Tense::unknown),
          b(object_has_cb_uri),
          b(object_has_dbp_uri),
          b(object_has_fb_uri),
          b(nytc_desc_bus),
          b(has_event_date),
          b(correct_temp_arg),
          b(is_noun_predicate),
          b(subject_has_dbp_uri),
          b(subject_has_cb_uri),
          b(subject_has_fb_uri)};
}

FeatureVector extract_features(const events::CandidateQuintuple& r,
                               const std::vector<events::CandidateQuintuple>& event_candidates) {
  FeatureVector f;
  std::size_t same_date = 0;
  std::size_t same_value = 0;
  for (const auto& c : event_candidates) {
    if (same_at(c.date.date, r.date.date, r.date.granularity)) ++same_date;
    if (c.value.same_value(r.value)) ++same_value;
  }
  // r is expected to be one of the event candidates; count it once if it is not.
  bool member = false;
  for (const auto& c : event_candidates) member = member || c.candidate_id == r.candidate_id;
  if (!member) {
    ++same_date;
    ++same_value;
  }
  const std::size_t total = event_candidates.size() + (member ? 0 : 1);
  f.dates_count = static_cast<double>(same_date);
  f.article_length = static_cast<double>(r.article_length);
  f.sentence_length = static_cast<double>(r.sentence_length);
  f.sentence_order = static_cast<double>(r.order_index);
  f.values_ratio = static_cast<double>(same_value) / static_cast<double>(total);
  f.correct_fin_arg = r.value_in_arg;
  f.pred_frequency = r.predicate_frequency;
  f.predicate_tense = r.tense;
  f.object_has_cb_uri = r.object_coverage.crunchbase;
  f.object_has_dbp_uri = r.object_coverage.dbpedia;
  f.object_has_fb_uri = r.object_coverage.freebase;
  f.nytc_desc_bus = r.business_desk;
  f.has_event_date = !r.date_is_publication;
  f.correct_temp_arg = r.date_in_arg;
  f.is_noun_predicate = r.is_noun_predicate;
  f.subject_has_dbp_uri = r.subject_coverage.dbpedia;
  f.subject_has_cb_uri = r.subject_coverage.crunchbase;
  f.subject_has_fb_uri = r.subject_coverage.freebase;
  return f;
}

}  // namespace evkb::selection

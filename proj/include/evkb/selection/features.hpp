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

#ifndef EVKB_SELECTION_FEATURES_HPP_
#define EVKB_SELECTION_FEATURES_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"
#include "evkb/events/events.hpp"

namespace evkb::selection {

inline constexpr std::size_t kFeatureCount = 18;

// Ranking features of one candidate within its event.
struct FeatureVector {
  double dates_count = 0;  // candidates sharing the date at this granularity
  double article_length = 0;
  double sentence_length = 0;
  double sentence_order = 0;
  double values_ratio = 0;  // share of candidates with the same value
  bool correct_fin_arg = false;
  double pred_frequency = 0;
  annotate::Tense predicate_tense = annotate::Tense::unknown;
  bool object_has_cb_uri = false;
  bool object_has_dbp_uri = false;
  bool object_has_fb_uri = false;
  bool nytc_desc_bus = false;
  bool has_event_date = false;
  bool correct_temp_arg = false;
  bool is_noun_predicate = false;
  bool subject_has_dbp_uri = false;
  bool subject_has_cb_uri = false;
  bool subject_has_fb_uri = false;

  // Numeric encoding, predicate_tense one-hot; see encoded_feature_names().
  std::vector<double> encode() const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

const std::array<std::string_view, kFeatureCount>& feature_names();
// Column names of FeatureVector::encode().
const std::vector<std::string>& encoded_feature_names();
// Feature a column belongs to ("predicate_tense=past" -> "predicate_tense").
std::string_view feature_of_column(std::string_view column);

FeatureVector extract_features(const events::CandidateQuintuple& r,
                               const std::vector<events::CandidateQuintuple>& event_candidates);

}  // namespace evkb::selection

#endif  // EVKB_SELECTION_FEATURES_HPP_

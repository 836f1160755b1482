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

#ifndef EVKB_EVENTS_EVENTS_HPP_
#define EVKB_EVENTS_EVENTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::events {

// Event identity: subject, second-level predicate class, object.
struct EventKey {
  std::string subject_id;
  std::string predicate_class;
  std::string object_id;

  // "subject~class~object"
  std::string to_string() const;
  static std::optional<EventKey> parse(std::string_view text);

  friend auto operator<=>(const EventKey&, const EventKey&) = default;
};

struct EventGroup {
  EventKey key;
  std::vector<annotate::AnnotatedSentence> sentences;  // S_e
};

// One structured representation r = (s, p, o, v, d) of an event together
// with the sentence-level context the ranking features are computed from.
struct CandidateQuintuple {
  std::string candidate_id;  // "<event key>~r<n>"
  EventKey key;
  std::string predicate_label;  // specific label, not the class
  annotate::MonetaryValue value;
  GranularDate date;
  bool date_is_publication = false;

  // Provenance.
  std::string sentence_id;
  std::string doc_id;
  std::size_t order_index = 0;
  Date published;
  std::size_t value_index = 0;
  std::size_t date_index = 0;
  std::size_t predicate_offset = 0;
  std::string sentence_text;

  // Sentence context.
  std::size_t sentence_length = 0;
  std::size_t article_length = 0;
  bool business_desk = false;
  double predicate_frequency = 0.0;
  annotate::Tense tense = annotate::Tense::unknown;
  bool is_noun_predicate = false;
  bool value_in_arg = false;
  bool date_in_arg = false;
  entities::UriCoverage subject_coverage;
  entities::UriCoverage object_coverage;

  friend bool operator==(const CandidateQuintuple&, const CandidateQuintuple&) = default;
};

// Buckets sentences by (subject, class, object). Groups come out sorted by
// key; sentences within a group by (published, doc_id, order_index,
// predicate position).
std::vector<EventGroup> group_sentences(const std::vector<annotate::AnnotatedSentence>& annotated,
                                        const oee::Ontology& ontology);
// Same, trusting the predicate_class stored on each sentence. Throws
// DataError if one is missing.
std::vector<EventGroup> group_sentences(const std::vector<annotate::AnnotatedSentence>& annotated);

// Every (value, date) pair of each sentence; the publication date stands in
// when a sentence has no explicit date.
std::vector<CandidateQuintuple> generate_candidates(const EventGroup& group);

// Candidates of several events, bucketed by key in key order. Candidates
// keep their relative order.
std::vector<std::vector<CandidateQuintuple>> split_by_event(
    const std::vector<CandidateQuintuple>& candidates);

}  // namespace evkb::events

#endif  // EVKB_EVENTS_EVENTS_HPP_

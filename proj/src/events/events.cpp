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

#include "evkb/events/events.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "evkb/core/error.hpp"

namespace evkb::events {

std::string EventKey::to_string() const {
  return subject_id + "~" + predicate_class + "~" + object_id;
}

std::optional<EventKey> EventKey::parse(std::string_view text) {
  const auto first = text.find('~');
  if (first == std::string_view::npos) return std::nullopt;
  const auto second = text.find('~', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  if (text.find('~', second + 1) != std::string_view::npos) return std::nullopt;
  EventKey key{std::string(text.substr(0, first)),
               std::string(text.substr(first + 1, second - first - 1)),
               std::string(text.substr(second + 1))};
  if (key.subject_id.empty() || key.predicate_class.empty() || key.object_id.empty()) {
    return std::nullopt;
  }
  return key;
}

namespace {

using ClassOf = std::function<std::string(const annotate::AnnotatedSentence&)>;

std::vector<EventGroup> group_by(const std::vector<annotate::AnnotatedSentence>& annotated,
                                 const ClassOf& class_of) {
  std::map<EventKey, std::vector<annotate::AnnotatedSentence>> buckets;
  for (const auto& sentence : annotated) {
    EventKey key{sentence.subject.entity_id, class_of(sentence), sentence.object.entity_id};
    buckets[std::move(key)].push_back(sentence);
  }
  std::vector<EventGroup> groups;
  groups.reserve(buckets.size());
  for (auto& [key, sentences] : buckets) {
    std::stable_sort(sentences.begin(), sentences.end(),
                     [](const annotate::AnnotatedSentence& a, const annotate::AnnotatedSentence& b) {
                       return std::tie(a.published, a.doc_id, a.order_index,
                                       a.predicate.char_span.begin) <
                              std::tie(b.published, b.doc_id, b.order_index,
                                       b.predicate.char_span.begin);
                     });
    groups.push_back({key, std::move(sentences)});
  }
  return groups;
}

}  // namespace

std::vector<EventGroup> group_sentences(const std::vector<annotate::AnnotatedSentence>& annotated,
                                        const oee::Ontology& ontology) {
  return group_by(annotated, [&](const annotate::AnnotatedSentence& s) {
    return ontology.second_level_ancestor(s.predicate.label);
  });
}

std::vector<EventGroup> group_sentences(const std::vector<annotate::AnnotatedSentence>& annotated) {
  return group_by(annotated, [](const annotate::AnnotatedSentence& s) {
    if (s.predicate_class.empty()) {
      throw DataError("sentence " + s.sentence_id + " has no predicate class");
    }
    return s.predicate_class;
  });
}

std::vector<CandidateQuintuple> generate_candidates(const EventGroup& group) {
  std::vector<CandidateQuintuple> out;
  const std::string prefix = group.key.to_string() + "~r";
  for (const auto& x : group.sentences) {
    const std::size_t n_dates = std::max<std::size_t>(1, x.dates.size());
    for (std::size_t vi = 0; vi < x.values.size(); ++vi) {
      for (std::size_t di = 0; di < n_dates; ++di) {
        CandidateQuintuple r;
        r.candidate_id = prefix + std::to_string(out.size());
        r.key = group.key;
        r.predicate_label = x.predicate.label;
        r.value = x.values[vi];
        if (x.dates.empty()) {
          r.date = {x.published, Granularity::day};
          r.date_is_publication = true;
        } else {
          r.date = x.dates[di].granular();
          r.date_in_arg = di < x.date_in_predicate_arg.size() && x.date_in_predicate_arg[di];
        }
        r.sentence_id = x.sentence_id;
        r.doc_id = x.doc_id;
        r.order_index = x.order_index;
        r.published = x.published;
        r.value_index = vi;
        r.date_index = di;
        r.predicate_offset = x.predicate.char_span.begin;
        r.sentence_text = x.text;
        r.sentence_length = x.sentence_length;
        r.article_length = x.article_length;
        r.business_desk = x.business_desk;
        r.predicate_frequency = x.predicate_frequency;
        r.tense = x.predicate.tense;
        r.is_noun_predicate = x.predicate.is_noun;
        r.value_in_arg = vi < x.value_in_predicate_arg.size() && x.value_in_predicate_arg[vi];
        r.subject_coverage = x.subject.coverage;
        r.object_coverage = x.object.coverage;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<std::vector<CandidateQuintuple>> split_by_event(
    const std::vector<CandidateQuintuple>& candidates) {
  std::map<EventKey, std::vector<CandidateQuintuple>> buckets;
  for (const auto& c : candidates) buckets[c.key].push_back(c);
  std::vector<std::vector<CandidateQuintuple>> out;
  out.reserve(buckets.size());
  for (auto& [key, group] : buckets) out.push_back(std::move(group));
  return out;
}

}  // namespace evkb::events

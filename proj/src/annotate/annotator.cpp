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

#include "evkb/annotate/annotator.hpp"

#include <algorithm>
#include <set>

#include "evkb/annotate/dates.hpp"
#include "evkb/annotate/entity_tagger.hpp"
#include "evkb/annotate/money.hpp"
#include "evkb/annotate/roles.hpp"

namespace evkb::annotate {
namespace {

template <typename T>
bool overlaps_any(const Span& span, const std::vector<T>& items) {
  return std::any_of(items.begin(), items.end(),
                     [&](const T& item) { return item.char_span.overlaps(span); });
}

}  // namespace

double PredicateFrequencies::relative(std::string_view label) const {
  if (total == 0) return 0.0;
  auto it = counts.find(label);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

PredicateFrequencies corpus_predicate_frequencies(const std::vector<corpus::Document>& documents,
                                                  const oee::Ontology& ontology) {
  const PredicateLexicon lexicon(ontology);
  PredicateFrequencies out;
  for (const auto& doc : documents) {
    for (const auto& sentence : corpus::segment_sentences(doc)) {
      std::set<std::string> labels;
      for (const auto& p : find_predicates(TokenizedSentence{sentence.text}, lexicon, true)) {
        labels.insert(p.mention.label);
      }
      for (const auto& label : labels) {
        ++out.counts[label];
        ++out.total;
      }
    }
  }
  return out;
}

Annotator::Annotator(const oee::Ontology& ontology, const entities::EntityRepository& repository,
                     AnnotatorOptions options)
    : ontology_(ontology), repository_(repository), options_(options), lexicon_(ontology) {}

std::vector<AnnotatedSentence> Annotator::annotate_corpus(
    const std::vector<corpus::Document>& documents, Diagnostics* diagnostics) const {
  const PredicateFrequencies frequencies = corpus_predicate_frequencies(documents, ontology_);
  std::vector<const corpus::Document*> ordered;
  for (const auto& doc : documents) ordered.push_back(&doc);
  std::sort(ordered.begin(), ordered.end(),
            [](const corpus::Document* a, const corpus::Document* b) { return a->doc_id < b->doc_id; });
  std::vector<AnnotatedSentence> out;
  for (const auto* doc : ordered) {
    auto annotated = annotate_document(*doc, frequencies, diagnostics);
    std::move(annotated.begin(), annotated.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<AnnotatedSentence> Annotator::annotate_document(const corpus::Document& document,
                                                            const PredicateFrequencies& frequencies,
                                                            Diagnostics* diagnostics) const {
  std::vector<AnnotatedSentence> out;
  SentenceContext context;
  context.doc_id = document.doc_id;
  context.published = document.published;
  context.article_length = document.word_count;
  context.business_desk = document.has_descriptor("Business");
  for (const auto& sentence : corpus::segment_sentences(document)) {
    context.sentence_id = sentence.sentence_id;
    context.order_index = sentence.order_index;
    Diagnostics local;
    auto annotated = annotate_sentence(sentence.text, context, frequencies, &local);
    for (auto& d : local) {
      d.source = sentence.sentence_id;
      report(diagnostics, std::move(d));
    }
    std::move(annotated.begin(), annotated.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<AnnotatedSentence> Annotator::annotate_sentence(std::string_view text,
                                                            const SentenceContext& context,
                                                            const PredicateFrequencies& frequencies,
                                                            Diagnostics* diagnostics) const {
  const TokenizedSentence sentence{std::string(text)};
  const auto values = recognize_monetary_values(sentence);
  if (values.empty()) return {};
  const auto mentions = recognize_entities(sentence, repository_, options_.require_description);
  if (mentions.size() < 2) return {};
  const auto dates = extract_dates(text, context.published, diagnostics);

  std::vector<AnnotatedSentence> out;
  for (const auto& predicate :
       find_predicates(sentence, lexicon_, options_.allow_noun_predicates)) {
    const Span& span = predicate.mention.char_span;
    // "Best Buy", "won" in "10 billion won", ...
    if (overlaps_any(span, mentions) || overlaps_any(span, values) || overlaps_any(span, dates)) {
      continue;
    }
    auto annotated = assign_roles(sentence, context, mentions, predicate, values, dates,
                                  options_.enforce_semantic_roles);
    if (!annotated) continue;
    annotated->predicate_class = ontology_.second_level_ancestor(annotated->predicate.label);
    annotated->predicate_frequency = frequencies.relative(annotated->predicate.label);
    out.push_back(std::move(*annotated));
  }
  return out;
}

}  // namespace evkb::annotate

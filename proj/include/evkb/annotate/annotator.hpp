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

#ifndef EVKB_ANNOTATE_ANNOTATOR_HPP_
#define EVKB_ANNOTATE_ANNOTATOR_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/annotate/predicates.hpp"
#include "evkb/annotate/types.hpp"
#include "evkb/core/error.hpp"
#include "evkb/corpus/corpus.hpp"
#include "evkb/entities/repository.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::annotate {

struct AnnotatorOptions {
  bool allow_noun_predicates = false;
  bool enforce_semantic_roles = false;
  bool require_description = false;
};

// Number of sentences mentioning each predicate label (verb or noun form),
// counted once per sentence.
struct PredicateFrequencies {
  std::map<std::string, std::size_t, std::less<>> counts;
  std::size_t total = 0;  // sum of counts

  double relative(std::string_view label) const;
};

PredicateFrequencies corpus_predicate_frequencies(const std::vector<corpus::Document>& documents,
                                                  const oee::Ontology& ontology);

class Annotator {
 public:
  Annotator(const oee::Ontology& ontology, const entities::EntityRepository& repository,
            AnnotatorOptions options);

  // Segments and annotates every document. Predicate frequencies are
  // computed over the same documents. Output is ordered by doc_id, then
  // sentence order, then predicate position.
  std::vector<AnnotatedSentence> annotate_corpus(const std::vector<corpus::Document>& documents,
                                                 Diagnostics* diagnostics = nullptr) const;

  std::vector<AnnotatedSentence> annotate_document(const corpus::Document& document,
                                                   const PredicateFrequencies& frequencies,
                                                   Diagnostics* diagnostics = nullptr) const;

  // One AnnotatedSentence per predicate whose roles could be assigned.
  std::vector<AnnotatedSentence> annotate_sentence(std::string_view text,
                                                   const SentenceContext& context,
                                                   const PredicateFrequencies& frequencies,
                                                   Diagnostics* diagnostics = nullptr) const;

  const AnnotatorOptions& options() const { return options_; }

 private:
  const oee::Ontology& ontology_;
  const entities::EntityRepository& repository_;
  AnnotatorOptions options_;
  PredicateLexicon lexicon_;
};

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_ANNOTATOR_HPP_

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

#ifndef EVKB_ANNOTATE_PREDICATES_HPP_
#define EVKB_ANNOTATE_PREDICATES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::annotate {

enum class VerbForm : unsigned {
  base = 1,
  third_person = 2,
  past = 4,
  past_participle = 8,
  gerund = 16,
};

struct VerbEntry {
  std::string label;
  unsigned forms = 0;  // VerbForm bits

  bool has(VerbForm form) const { return (forms & static_cast<unsigned>(form)) != 0; }
};

// Inflected forms of `lemma`: base, third person, past, past participle
// and gerund, with irregular verbs taken from a built-in table.
std::map<std::string, unsigned> inflect_verb(std::string_view lemma);

// Gazetteer of inflected ontology verbs and noun forms (with plurals).
// Hyphenated labels ("profit-net") are reachable through their head word
// only when the head is not a label itself.
class PredicateLexicon {
 public:
  PredicateLexicon() = default;
  explicit PredicateLexicon(const oee::Ontology& ontology);

  const VerbEntry* verb(std::string_view lower_token) const;
  // Ontology label the noun maps to.
  const std::string* noun(std::string_view lower_token) const;

 private:
  std::map<std::string, VerbEntry, std::less<>> verbs_;
  std::map<std::string, std::string, std::less<>> nouns_;
};

// A predicate found in a tokenized sentence.
struct PredicateToken {
  std::size_t token_index = 0;
  PredicateMention mention;
  bool passive = false;  // be-auxiliary + past participle
};

std::vector<PredicateToken> find_predicates(const TokenizedSentence& sentence,
                                            const PredicateLexicon& lexicon,
                                            bool allow_noun_predicates);

std::vector<PredicateMention> recognize_predicates(std::string_view sentence,
                                                   const oee::Ontology& ontology,
                                                   bool allow_noun_predicates);

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_PREDICATES_HPP_

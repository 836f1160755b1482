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

#ifndef EVKB_ANNOTATE_TYPES_HPP_
#define EVKB_ANNOTATE_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/core/date.hpp"
#include "evkb/core/decimal.hpp"
#include "evkb/core/text.hpp"
#include "evkb/entities/repository.hpp"

namespace evkb::annotate {

// All spans below are byte offsets into the sentence text.

struct MonetaryValue {
  Decimal amount;
  std::string currency;  // ISO-4217
  Span char_span;
  std::string raw_text;

  // Same normalized amount and currency.
  bool same_value(const MonetaryValue& other) const {
    return amount == other.amount && currency == other.currency;
  }
  friend bool operator==(const MonetaryValue&, const MonetaryValue&) = default;
};

struct DateMention {
  Date date;
  Granularity granularity = Granularity::day;
  Span char_span;
  bool is_relative = false;

  GranularDate granular() const { return {date, granularity}; }
  friend bool operator==(const DateMention&, const DateMention&) = default;
};

enum class Tense { past, present, future, unknown };

std::string_view tense_name(Tense tense);
std::optional<Tense> parse_tense(std::string_view name);

struct PredicateMention {
  std::string label;  // ontology label, noun forms already mapped
  bool is_noun = false;
  Tense tense = Tense::unknown;
  Span char_span;

  friend bool operator==(const PredicateMention&, const PredicateMention&) = default;
};

enum class Role { subject, object };

struct EntityMention {
  std::string entity_id;
  Span char_span;
  std::optional<Role> role;
  entities::UriCoverage coverage;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

// A sentence with everything needed to build quintuples from it. Document
// level inputs of the ranking features travel with it so later stages do
// not need the corpus or the repositories.
struct AnnotatedSentence {
  std::string sentence_id;
  std::string doc_id;
  std::size_t order_index = 0;
  std::string text;
  Date published;                  // d_x
  std::size_t sentence_length = 0;  // tokens
  std::size_t article_length = 0;   // document word count
  bool business_desk = false;       // descriptors contain "Business"

  std::vector<MonetaryValue> values;  // never empty
  std::vector<bool> value_in_predicate_arg;
  std::vector<DateMention> dates;  // D_x, possibly empty
  std::vector<bool> date_in_predicate_arg;

  PredicateMention predicate;
  std::string predicate_class;  // second-level ancestor of predicate.label
  double predicate_frequency = 0.0;

  EntityMention subject;
  EntityMention object;
  bool value_in_correct_arg = false;
  bool date_in_correct_arg = false;

  friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

// Document-level context handed to role assignment.
struct SentenceContext {
  std::string sentence_id;
  std::string doc_id;
  std::size_t order_index = 0;
  Date published;
  std::size_t article_length = 0;
  bool business_desk = false;
};

// Sentence text with its tokens; tokens view into `text`.
class TokenizedSentence {
 public:
  explicit TokenizedSentence(std::string text);
  TokenizedSentence(const TokenizedSentence& other);
  TokenizedSentence& operator=(const TokenizedSentence& other);

  const std::string& text() const { return text_; }
  const std::vector<Token>& tokens() const { return tokens_; }

  // Index of the first token starting at or after `offset`.
  std::size_t token_at_or_after(std::size_t offset) const;
  // Index of the token containing `offset`, or tokens().size().
  std::size_t token_containing(std::size_t offset) const;

 private:
  std::string text_;
  std::vector<Token> tokens_;
};

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_TYPES_HPP_

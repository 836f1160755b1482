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

#include "evkb/annotate/roles.hpp"

#include <set>
#include <string>

namespace evkb::annotate {
namespace {

const std::set<std::string, std::less<>>& clause_breaks() {
  static const std::set<std::string, std::less<>> marks = {",", ";", ":", "!", "?",
                                                           "(", ")", "–", "—"};
  return marks;
}

const std::set<std::string, std::less<>>& subject_blockers() {
  static const std::set<std::string, std::less<>> words = {"it",  "they", "he", "she",
                                                           "which", "who", "we"};
  return words;
}

// Words allowed between "for"/"at"/"worth" and the amount.
const std::set<std::string, std::less<>>& amount_modifiers() {
  static const std::set<std::string, std::less<>> words = {
      "about", "around", "roughly", "approximately", "nearly", "almost", "some", "over",
      "under", "more", "less", "than", "up", "to", "an", "a", "estimated", "reported",
      "total", "of", "just", "as", "much", "many", "close"};
  return words;
}

struct Range {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

class RoleAssigner {
 public:
  RoleAssigner(const TokenizedSentence& sentence, const std::vector<EntityMention>& mentions,
               const PredicateToken& predicate)
      : sentence_(sentence), tokens_(sentence.tokens()), mentions_(mentions), p_(predicate.token_index) {
    for (const auto& t : tokens_) lower_.push_back(ascii_lower(t.text));
    for (const auto& m : mentions_) ranges_.push_back(range_of(m.char_span));
    clause_begin_ = 0;
    for (std::size_t j = p_; j > 0; --j) {
      if (is_break(j - 1)) {
        clause_begin_ = j;
        break;
      }
    }
    clause_end_ = tokens_.size();
    for (std::size_t j = p_ + 1; j < tokens_.size(); ++j) {
      if (is_break(j)) {
        clause_end_ = j;
        break;
      }
    }
  }

  Range range_of(const Span& span) const {
    const std::size_t first = sentence_.token_at_or_after(span.begin);
    std::size_t end = sentence_.token_at_or_after(span.end);
    if (end == first) end = first + 1;
    return {first, end - 1};
  }

  bool is_break(std::size_t j) const {
    return tokens_[j].kind == TokenKind::punct && clause_breaks().contains(tokens_[j].text);
  }

  std::optional<std::size_t> nearest_left() const {
    std::optional<std::size_t> best;
    for (std::size_t m = 0; m < ranges_.size(); ++m) {
      if (ranges_[m].last < p_ && (!best || ranges_[m].last > ranges_[*best].last)) best = m;
    }
    if (!best) return std::nullopt;
    for (std::size_t j = ranges_[*best].last + 1; j < p_; ++j) {
      if (subject_blockers().contains(lower_[j])) return std::nullopt;
    }
    return best;
  }

  std::optional<std::size_t> nearest_right() const {
    std::optional<std::size_t> best;
    for (std::size_t m = 0; m < ranges_.size(); ++m) {
      if (ranges_[m].first > p_ && (!best || ranges_[m].first < ranges_[*best].first)) best = m;
    }
    return best;
  }

  // Mention starting right after token `j` (an optional "the" skipped).
  std::optional<std::size_t> mention_after(std::size_t j) const {
    std::size_t start = j + 1;
    if (start < tokens_.size() && lower_[start] == "the") ++start;
    for (std::size_t m = 0; m < ranges_.size(); ++m) {
      if (ranges_[m].first == start) return m;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> by_agent() const {
    for (std::size_t j = p_ + 1; j < clause_end_; ++j) {
      if (lower_[j] == "by") return mention_after(j);
    }
    return std::nullopt;
  }

  std::optional<std::size_t> of_object() const {
    if (p_ + 1 < tokens_.size() && lower_[p_ + 1] == "of") return mention_after(p_ + 1);
    return std::nullopt;
  }

  bool value_in_argument(const Range& v, bool is_noun, const std::optional<Range>& object) const {
    if (is_noun && v.last + 1 == p_) return true;
    if (v.first <= p_ || v.first >= clause_end_) return false;
    if (v.first == p_ + 1) return true;
    if (object && object->last < v.first && v.first == object->last + 1) return true;
    std::size_t j = v.first;
    for (int skipped = 0; j > p_ + 1 && skipped <= 3; ++skipped) {
      --j;
      const std::string& w = lower_[j];
      if (w == "for" || w == "at" || w == "worth") return true;
      if (!amount_modifiers().contains(w)) return false;
    }
    return false;
  }

  // A date may run past a clause break ("May 3, 2005"); only its start counts.
  bool date_in_argument(const Range& d) const {
    return d.first >= clause_begin_ && d.first < clause_end_;
  }

  std::size_t clause_begin_ = 0;
  std::size_t clause_end_ = 0;
  const TokenizedSentence& sentence_;
  const std::vector<Token>& tokens_;
  const std::vector<EntityMention>& mentions_;
  std::size_t p_;
  std::vector<std::string> lower_;
  std::vector<Range> ranges_;
};

}  // namespace

std::optional<AnnotatedSentence> assign_roles(const TokenizedSentence& sentence,
                                              const SentenceContext& context,
                                              const std::vector<EntityMention>& mentions,
                                              const PredicateToken& predicate,
                                              const std::vector<MonetaryValue>& values,
                                              const std::vector<DateMention>& dates,
                                              bool enforce_semantic_roles) {
  if (values.empty() || mentions.size() < 2) return std::nullopt;
  const RoleAssigner roles(sentence, mentions, predicate);

  std::optional<std::size_t> subject;
  std::optional<std::size_t> object;
  const std::optional<std::size_t> agent = roles.by_agent();
  if (predicate.mention.is_noun) {
    const std::optional<std::size_t> of_obj = roles.of_object();
    if (agent) {
      subject = agent;
      object = of_obj ? of_obj : roles.nearest_left();
    } else {
      subject = roles.nearest_left();
      object = of_obj ? of_obj : roles.nearest_right();
    }
  } else if (predicate.passive) {
    subject = agent;
    object = roles.nearest_left();
  } else {
    subject = roles.nearest_left();
    object = roles.nearest_right();
  }
  if (!subject || !object) return std::nullopt;
  if (mentions[*subject].entity_id == mentions[*object].entity_id) return std::nullopt;

  AnnotatedSentence out;
  out.sentence_id = context.sentence_id;
  out.doc_id = context.doc_id;
  out.order_index = context.order_index;
  out.text = sentence.text();
  out.published = context.published;
  out.sentence_length = sentence.tokens().size();
  out.article_length = context.article_length;
  out.business_desk = context.business_desk;
  out.values = values;
  out.dates = dates;
  out.predicate = predicate.mention;

  const std::optional<Range> object_range = roles.ranges_[*object];
  for (const auto& v : values) {
    const bool in_arg =
        roles.value_in_argument(roles.range_of(v.char_span), predicate.mention.is_noun, object_range);
    out.value_in_predicate_arg.push_back(in_arg);
    out.value_in_correct_arg = out.value_in_correct_arg || in_arg;
  }
  for (const auto& d : dates) {
    const bool in_arg = roles.date_in_argument(roles.range_of(d.char_span));
    out.date_in_predicate_arg.push_back(in_arg);
    out.date_in_correct_arg = out.date_in_correct_arg || in_arg;
  }
  if (enforce_semantic_roles && !out.value_in_correct_arg) return std::nullopt;

  out.subject = mentions[*subject];
  out.subject.role = Role::subject;
  out.object = mentions[*object];
  out.object.role = Role::object;
  return out;
}

}  // namespace evkb::annotate

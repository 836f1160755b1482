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

#include "evkb/annotate/entity_tagger.hpp"

#include <algorithm>
#include <string>

namespace evkb::annotate {
namespace {

bool is_name_start(const Token& t) { return t.kind == TokenKind::word && is_capitalized(t.text); }

// Tokens allowed inside a multi-word name.
bool is_name_interior(const Token& t) {
  if (t.kind == TokenKind::word || t.kind == TokenKind::number) {
    return t.text != "'s" && t.text != "’s";
  }
  return t.text == "&" || t.text == "." || t.text == "-";
}

bool is_name_end(const Token& t) {
  return t.kind == TokenKind::number || (t.kind == TokenKind::word && is_capitalized(t.text));
}

struct Candidate {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  Span span;
  const entities::EntityRecord* record = nullptr;
};

}  // namespace

std::vector<EntityMention> recognize_entities(const TokenizedSentence& sentence,
                                              const entities::EntityRepository& repository,
                                              bool require_description) {
  const auto& tokens = sentence.tokens();
  const std::string_view text = sentence.text();
  // Punctuation tokens ("Inc" ".") make spans longer than their word count.
  const std::size_t max_tokens = 2 * std::max<std::size_t>(repository.max_form_words(), 1);
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_name_start(tokens[i])) continue;
    for (std::size_t j = i; j < tokens.size() && j - i < max_tokens; ++j) {
      if (j > i && !is_name_interior(tokens[j])) break;
      if (!is_name_end(tokens[j])) continue;
      const Span span{tokens[i].span.begin, tokens[j].span.end};
      const auto* record =
          repository.resolve_mention(text.substr(span.begin, span.size()), require_description);
      if (record != nullptr) candidates.push_back({i, j, span, record});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
    return a.span.begin < b.span.begin;
  });
  std::vector<EntityMention> out;
  for (const auto& c : candidates) {
    const bool clash = std::any_of(out.begin(), out.end(), [&](const EntityMention& m) {
      return m.char_span.overlaps(c.span);
    });
    if (clash) continue;
    out.push_back({c.record->entity_id, c.span, std::nullopt, c.record->coverage()});
  }
  std::sort(out.begin(), out.end(), [](const EntityMention& a, const EntityMention& b) {
    return a.char_span.begin < b.char_span.begin;
  });
  return out;
}

std::vector<EntityMention> recognize_entities(std::string_view sentence,
                                              const entities::EntityRepository& repository,
                                              bool require_description) {
  return recognize_entities(TokenizedSentence{std::string(sentence)}, repository,
                            require_description);
}

}  // namespace evkb::annotate

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

#include "evkb/annotate/types.hpp"

#include <algorithm>

namespace evkb::annotate {

std::string_view tense_name(Tense tense) {
  switch (tense) {
    case Tense::past:
      return "past";
    case Tense::present:
      return "present";
    case Tense::future:
      return "future";
    case Tense::unknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Tense> parse_tense(std::string_view name) {
  for (Tense t : {Tense::past, Tense::present, Tense::future, Tense::unknown}) {
    if (tense_name(t) == name) return t;
  }
  return std::nullopt;
}

TokenizedSentence::TokenizedSentence(std::string text)
    : text_(std::move(text)), tokens_(tokenize(text_)) {}

// Tokens view into text_, so copies re-tokenize their own buffer.
TokenizedSentence::TokenizedSentence(const TokenizedSentence& other)
    : text_(other.text_), tokens_(tokenize(text_)) {}

TokenizedSentence& TokenizedSentence::operator=(const TokenizedSentence& other) {
  if (this != &other) {
    text_ = other.text_;
    tokens_ = tokenize(text_);
  }
  return *this;
}

std::size_t TokenizedSentence::token_at_or_after(std::size_t offset) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), offset,
                             [](const Token& t, std::size_t off) { return t.span.begin < off; });
  return static_cast<std::size_t>(it - tokens_.begin());
}

std::size_t TokenizedSentence::token_containing(std::size_t offset) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].span.begin <= offset && offset < tokens_[i].span.end) return i;
  }
  return tokens_.size();
}

}  // namespace evkb::annotate

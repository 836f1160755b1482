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

#ifndef EVKB_CORE_TEXT_HPP_
#define EVKB_CORE_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evkb {

// Half-open byte range [begin, end) into some UTF-8 text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool overlaps(const Span& other) const { return begin < other.end && other.begin < end; }
  bool contains(const Span& other) const { return begin <= other.begin && other.end <= end; }

  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { word, number, symbol, punct };

struct Token {
  std::string_view text;  // view into the tokenized text
  Span span;
  TokenKind kind = TokenKind::word;
};

// Splits newswire text into words, numerals, symbols and punctuation.
// Numerals keep their grouping and decimal marks ("1,650.5"), words keep
// internal hyphens and apostrophes ("twenty-five", "O'Neil"), dotted
// abbreviations keep their final period ("U.S.", "p.m."), and a possessive
// "'s" becomes its own token. Non-ASCII code points count as letters unless
// they are typographic punctuation or currency signs.
std::vector<Token> tokenize(std::string_view text);

std::string ascii_lower(std::string_view text);
std::string_view trim(std::string_view text);
bool is_capitalized(std::string_view token);
bool is_ascii_space(char c);

// Case-folds ASCII, drops punctuation, turns hyphens/slashes into spaces
// and collapses whitespace. Used for every surface-form comparison.
std::string normalize_surface(std::string_view text);

std::size_t count_whitespace_tokens(std::string_view text);

// Byte length of the UTF-8 sequence starting with `lead` (1 for invalid).
std::size_t utf8_length(unsigned char lead);

}  // namespace evkb

#endif  // EVKB_CORE_TEXT_HPP_

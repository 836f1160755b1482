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

#include "evkb/core/text.hpp"

#include <array>
#include <cctype>

namespace evkb {
namespace {

constexpr std::array<std::string_view, 9> kPunctCodePoints = {
    "‘", "’", "“", "”", "–", "—", "…", "«", "»"};
constexpr std::array<std::string_view, 5> kCurrencyCodePoints = {"€", "£", "¥",
                                                                 "₹", "₩"};
constexpr std::string_view kNbsp = " ";

bool is_ascii_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_ascii_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view code_point_at(std::string_view text, std::size_t pos) {
  std::size_t len = utf8_length(static_cast<unsigned char>(text[pos]));
  if (pos + len > text.size()) len = text.size() - pos;
  return text.substr(pos, len);
}

template <std::size_t N>
bool one_of(std::string_view cp, const std::array<std::string_view, N>& set) {
  for (auto s : set) {
    if (cp == s) return true;
  }
  return false;
}

// Letter-like: ASCII alnum, or any non-ASCII code point that is not
// punctuation, currency or a non-breaking space.
bool is_word_char_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  const char c = text[pos];
  if (static_cast<unsigned char>(c) < 0x80) return is_ascii_alnum(c);
  std::string_view cp = code_point_at(text, pos);
  return !one_of(cp, kPunctCodePoints) && !one_of(cp, kCurrencyCodePoints) && cp != kNbsp;
}

bool is_apostrophe_at(std::string_view text, std::size_t pos, std::size_t* len) {
  if (pos >= text.size()) return false;
  if (text[pos] == '\'') {
    *len = 1;
    return true;
  }
  if (text.substr(pos, 3) == "’") {
    *len = 3;
    return true;
  }
  return false;
}

// "'s" followed by a non-letter.
bool is_possessive_at(std::string_view text, std::size_t pos) {
  std::size_t len = 0;
  if (!is_apostrophe_at(text, pos, &len)) return false;
  std::size_t s = pos + len;
  if (s >= text.size() || (text[s] != 's' && text[s] != 'S')) return false;
  return !is_word_char_at(text, s + 1);
}

}  // namespace

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_ascii_space(text[i])) {
      ++i;
      continue;
    }
    if (text.substr(i, kNbsp.size()) == kNbsp) {
      i += kNbsp.size();
      continue;
    }
    if (is_possessive_at(text, i)) {
      std::size_t len = 0;
      is_apostrophe_at(text, i, &len);
      tokens.push_back({text.substr(i, len + 1), {i, i + len + 1}, TokenKind::word});
      i += len + 1;
      continue;
    }
    if (is_word_char_at(text, i)) {
      const std::size_t start = i;
      bool dotted_letters = false;
      while (i < n) {
        if (is_word_char_at(text, i)) {
          i += code_point_at(text, i).size();
          continue;
        }
        const char c = text[i];
        const bool prev_digit = is_ascii_digit(text[i - 1]);
        const bool next_digit = i + 1 < n && is_ascii_digit(text[i + 1]);
        std::size_t apos = 0;
        if (c == ',' && prev_digit && next_digit) {
          ++i;
        } else if (c == '.' && i + 1 < n && is_ascii_alnum(text[i + 1])) {
          if (is_ascii_alpha(text[i - 1]) && is_ascii_alpha(text[i + 1])) dotted_letters = true;
          ++i;
        } else if ((c == '-' || c == '&') && i + 1 < n && is_ascii_alnum(text[i + 1])) {
          ++i;
        } else if (is_apostrophe_at(text, i, &apos) && !is_possessive_at(text, i) &&
                   is_word_char_at(text, i + apos)) {
          i += apos;
        } else {
          break;
        }
      }
      if (dotted_letters && i < n && text[i] == '.') ++i;
      TokenKind kind = is_ascii_digit(text[start]) ? TokenKind::number : TokenKind::word;
      tokens.push_back({text.substr(start, i - start), {start, i}, kind});
      continue;
    }
    std::string_view cp = code_point_at(text, i);
    TokenKind kind = TokenKind::punct;
    if (cp == "$" || cp == "%" || one_of(cp, kCurrencyCodePoints)) kind = TokenKind::symbol;
    tokens.push_back({cp, {i, i + cp.size()}, kind});
    i += cp.size();
  }
  return tokens;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && is_ascii_space(text[b])) ++b;
  while (e > b && is_ascii_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

bool is_capitalized(std::string_view token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token[0])) != 0;
}

std::string normalize_surface(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  auto emit = [&](std::string_view piece) {
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(piece);
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (static_cast<unsigned char>(c) < 0x80) {
      if (is_ascii_alnum(c)) {
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        emit(std::string_view(&lower, 1));
      } else if (is_ascii_space(c) || c == '-' || c == '/' || c == '_') {
        pending_space = true;
      }
      ++i;
      continue;
    }
    std::string_view cp = code_point_at(text, i);
    if (cp == "–" || cp == "—" || cp == kNbsp) {
      pending_space = true;
    } else if (!one_of(cp, kPunctCodePoints)) {
      emit(cp);
    }
    i += cp.size();
  }
  return out;
}

std::size_t count_whitespace_tokens(std::string_view text) {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : text) {
    if (is_ascii_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

}  // namespace evkb

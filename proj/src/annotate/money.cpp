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

#include "evkb/annotate/money.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "evkb/core/error.hpp"

namespace evkb::annotate {
namespace {

constexpr long long kNumberWordLimit = 1'000'000'000'000'000LL;

const std::map<std::string, int, std::less<>>& small_numbers() {
  static const std::map<std::string, int, std::less<>> table = {
      {"zero", 0},     {"one", 1},        {"two", 2},        {"three", 3},
      {"four", 4},     {"five", 5},       {"six", 6},        {"seven", 7},
      {"eight", 8},    {"nine", 9},       {"ten", 10},       {"eleven", 11},
      {"twelve", 12},  {"thirteen", 13},  {"fourteen", 14},  {"fifteen", 15},
      {"sixteen", 16}, {"seventeen", 17}, {"eighteen", 18},  {"nineteen", 19},
      {"twenty", 20},  {"thirty", 30},    {"forty", 40},     {"fifty", 50},
      {"sixty", 60},   {"seventy", 70},   {"eighty", 80},    {"ninety", 90}};
  return table;
}

std::vector<std::string> split_hyphens(std::string_view word) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : word) {
    if (c == '-') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

bool is_number_word(std::string_view lower) {
  for (const auto& part : split_hyphens(lower)) {
    if (part != "hundred" && !small_numbers().contains(part) && !magnitude_exponent(part)) {
      return false;
    }
  }
  return true;
}

struct Match {
  std::size_t end_token = 0;  // one past the last consumed token
  Decimal amount;
};

class Recognizer {
 public:
  explicit Recognizer(const TokenizedSentence& sentence)
      : text_(sentence.text()), tokens_(sentence.tokens()) {
    lower_.reserve(tokens_.size());
    for (const auto& t : tokens_) lower_.push_back(ascii_lower(t.text));
  }

  std::vector<MonetaryValue> run() {
    std::vector<MonetaryValue> out;
    std::size_t i = 0;
    while (i < tokens_.size()) {
      std::optional<MonetaryValue> value = match_at(i);
      if (value) {
        i = next_index_;
        out.push_back(std::move(*value));
      } else {
        ++i;
      }
    }
    return out;
  }

 private:
  std::optional<MonetaryValue> match_at(std::size_t i) {
    // Currency before the amount: symbol, prefixed symbol or ISO code.
    for (const auto& currency : currency_table()) {
      for (const auto& prefix : currency.prefixes) {
        std::size_t after = match_sequence(i, prefix, /*case_sensitive=*/true);
        if (after == 0) continue;
        if (auto amount = match_numeric_amount(after)) return finish(i, *amount, currency.code);
      }
      if (i < tokens_.size() && tokens_[i].text == currency.code) {
        if (auto amount = match_numeric_amount(i + 1)) return finish(i, *amount, currency.code);
      }
    }
    // Amount followed by a currency name or code.
    std::optional<Match> amount = match_numeric_amount(i);
    if (!amount) amount = match_word_amount(i);
    if (!amount) return std::nullopt;
    const std::size_t after = amount->end_token;
    for (const auto& currency : currency_table()) {
      if (after < tokens_.size() && tokens_[after].text == currency.code) {
        return finish(i, Match{after + 1, amount->amount}, currency.code);
      }
    }
    std::size_t best_end = 0;
    const CurrencyInfo* best = nullptr;
    for (const auto& currency : currency_table()) {
      for (const auto& name : currency.names) {
        std::size_t end = match_sequence(after, name, /*case_sensitive=*/false);
        if (end > best_end) {
          best_end = end;
          best = &currency;
        }
      }
    }
    if (best == nullptr) return std::nullopt;
    return finish(i, Match{best_end, amount->amount}, best->code);
  }

  std::optional<MonetaryValue> finish(std::size_t first, const Match& match,
                                      const std::string& code) {
    if (!match.amount.is_positive()) return std::nullopt;
    next_index_ = match.end_token;
    MonetaryValue value;
    value.amount = match.amount;
    value.currency = code;
    value.char_span = {tokens_[first].span.begin, tokens_[match.end_token - 1].span.end};
    value.raw_text = std::string(text_.substr(value.char_span.begin, value.char_span.size()));
    return value;
  }

  // Matches a space-separated token sequence; returns the index after it or 0.
  // Symbol prefixes are case-sensitive and must be written without spaces
  // ("C$5" but not "A $5").
  std::size_t match_sequence(std::size_t i, std::string_view sequence, bool case_sensitive) const {
    std::istringstream parts{std::string(sequence)};
    std::string part;
    std::size_t j = i;
    while (parts >> part) {
      if (j >= tokens_.size()) return 0;
      const bool equal = case_sensitive ? tokens_[j].text == part : lower_[j] == part;
      if (!equal) return 0;
      if (case_sensitive && j > i && tokens_[j - 1].span.end != tokens_[j].span.begin) return 0;
      ++j;
    }
    return j;
  }

  // numeral [magnitude], also "1.5bn" / "300mln" style suffixes.
  std::optional<Match> match_numeric_amount(std::size_t i) const {
    if (i >= tokens_.size() || tokens_[i].kind != TokenKind::number) return std::nullopt;
    std::string_view text = tokens_[i].text;
    int suffix_exponent = 0;
    for (auto [suffix, exponent] : {std::pair<std::string_view, int>{"bn", 9}, {"mln", 6}}) {
      if (text.size() > suffix.size() && text.ends_with(suffix)) {
        text.remove_suffix(suffix.size());
        suffix_exponent = exponent;
        break;
      }
    }
    std::optional<Decimal> value = Decimal::parse(text);
    if (!value) return std::nullopt;
    std::size_t end = i + 1;
    try {
      if (suffix_exponent > 0) {
        value = value->shifted(suffix_exponent);
      } else if (end < tokens_.size()) {
        if (auto exponent = magnitude_exponent(lower_[end])) {
          value = value->shifted(*exponent);
          ++end;
        }
      }
    } catch (const DataError&) {
      return std::nullopt;
    }
    return Match{end, *value};
  }

  // Spelled-out cardinal, optionally introduced by "a"/"an" before a scale.
  std::optional<Match> match_word_amount(std::size_t i) const {
    std::vector<std::string> words;
    std::size_t j = i;
    if (j < tokens_.size() && (lower_[j] == "a" || lower_[j] == "an") && j + 1 < tokens_.size() &&
        (lower_[j + 1] == "hundred" || magnitude_exponent(lower_[j + 1]))) {
      words.push_back("one");
      ++j;
    }
    std::size_t last_number = 0;
    while (j < tokens_.size() && tokens_[j].kind == TokenKind::word) {
      if (lower_[j] == "and" && !words.empty()) {
        words.push_back("and");
        ++j;
        continue;
      }
      if (!is_number_word(lower_[j])) break;
      words.push_back(lower_[j]);
      ++j;
      last_number = j;
    }
    if (last_number == 0) return std::nullopt;
    while (!words.empty() && words.back() == "and") words.pop_back();
    auto value = parse_number_words(words);
    if (!value) return std::nullopt;
    return Match{last_number, Decimal::from_integer(*value)};
  }

  std::string_view text_;
  const std::vector<Token>& tokens_;
  std::vector<std::string> lower_;
  std::size_t next_index_ = 0;
};

}  // namespace

const std::vector<CurrencyInfo>& currency_table() {
  static const std::vector<CurrencyInfo> table = {
      {"USD", {"$", "US $", "U.S. $"}, {"dollars", "dollar", "us dollars", "u.s. dollars", "american dollars"}},
      {"EUR", {"€"}, {"euros", "euro"}},
      {"GBP", {"£"}, {"pounds sterling", "pounds", "pound", "british pounds", "sterling"}},
      {"JPY", {"¥"}, {"yen", "japanese yen"}},
      {"CNY", {"RMB"}, {"yuan", "renminbi", "chinese yuan"}},
      {"CHF", {}, {"swiss francs", "swiss franc", "francs"}},
      {"CAD", {"C $", "CA $"}, {"canadian dollars", "canadian dollar"}},
      {"AUD", {"A $", "AU $"}, {"australian dollars", "australian dollar"}},
      {"NZD", {"NZ $"}, {"new zealand dollars"}},
      {"HKD", {"HK $"}, {"hong kong dollars"}},
      {"SGD", {"S $"}, {"singapore dollars"}},
      {"INR", {"₹", "Rs"}, {"rupees", "rupee", "indian rupees"}},
      {"RUB", {}, {"rubles", "roubles", "russian rubles"}},
      {"KRW", {"₩"}, {"korean won", "south korean won"}},
      {"BRL", {"R $"}, {"reais", "brazilian reais"}},
      {"MXN", {}, {"mexican pesos", "pesos"}},
      {"SEK", {}, {"swedish kronor", "kronor"}},
      {"NOK", {}, {"norwegian kroner"}},
      {"DKK", {}, {"danish kroner"}},
      {"ZAR", {}, {"rand", "south african rand"}},
  };
  return table;
}

const CurrencyInfo* find_currency(std::string_view code) {
  for (const auto& c : currency_table()) {
    if (c.code == code) return &c;
  }
  return nullptr;
}

std::optional<int> magnitude_exponent(std::string_view word) {
  if (word == "thousand") return 3;
  if (word == "million") return 6;
  if (word == "billion") return 9;
  if (word == "trillion") return 12;
  return std::nullopt;
}

std::optional<long long> parse_number_words(const std::vector<std::string>& words) {
  long long total = 0;
  long long current = 0;
  int last_scale = 100;  // scales must strictly decrease
  bool any = false;
  bool pending_and = false;
  for (const auto& word : words) {
    if (word == "and") {
      if (!any || pending_and) return std::nullopt;
      pending_and = true;
      continue;
    }
    for (const auto& part : split_hyphens(word)) {
      pending_and = false;
      if (auto it = small_numbers().find(part); it != small_numbers().end()) {
        const long long n = it->second;
        // "twenty five" ok, "five twenty" and "five five" not.
        if (current % 100 != 0 && (n >= 10 || current % 10 != 0 || current % 100 < 20)) {
          return std::nullopt;
        }
        current += n;
        any = true;
      } else if (part == "hundred") {
        if (current >= 100) return std::nullopt;
        current = (current == 0 ? 1 : current) * 100;
        any = true;
      } else if (auto exponent = magnitude_exponent(part)) {
        if (*exponent >= last_scale) return std::nullopt;
        last_scale = *exponent;
        long long scale = 1;
        for (int k = 0; k < *exponent; ++k) scale *= 10;
        total += (current == 0 ? 1 : current) * scale;
        current = 0;
        any = true;
      } else {
        return std::nullopt;
      }
    }
  }
  if (!any || pending_and) return std::nullopt;
  total += current;
  if (total >= kNumberWordLimit) return std::nullopt;
  return total;
}

std::vector<MonetaryValue> recognize_monetary_values(const TokenizedSentence& sentence) {
  return Recognizer(sentence).run();
}

std::vector<MonetaryValue> recognize_monetary_values(std::string_view sentence) {
  return recognize_monetary_values(TokenizedSentence{std::string(sentence)});
}

}  // namespace evkb::annotate

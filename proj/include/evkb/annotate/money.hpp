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

#ifndef EVKB_ANNOTATE_MONEY_HPP_
#define EVKB_ANNOTATE_MONEY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"

namespace evkb::annotate {

struct CurrencyInfo {
  std::string code;
  std::vector<std::string> prefixes;  // token sequences joined by ' ', e.g. "US $"
  std::vector<std::string> names;     // lowercase, e.g. "us dollars"
};

// The shipped currency table (20 currencies).
const std::vector<CurrencyInfo>& currency_table();
const CurrencyInfo* find_currency(std::string_view code);

// Value of a spelled-out cardinal ("two billion", "one hundred and
// twenty-five thousand"), bounded below 10^15. nullopt if not a number.
std::optional<long long> parse_number_words(const std::vector<std::string>& words);

// Magnitude word to power of ten (thousand=3 ... trillion=12).
std::optional<int> magnitude_exponent(std::string_view word);

// Recognizes amounts with a currency symbol, code or name before or after
// them. Amounts are numerals ("1,650.5"), numerals with a magnitude word
// ("$3.2 billion") or number words ("two billion US dollars").
std::vector<MonetaryValue> recognize_monetary_values(const TokenizedSentence& sentence);
std::vector<MonetaryValue> recognize_monetary_values(std::string_view sentence);

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_MONEY_HPP_

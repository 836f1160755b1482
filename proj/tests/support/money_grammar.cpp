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

#include "money_grammar.hpp"

#include <array>
#include <vector>

namespace evkb::testing {
namespace {

const std::array<const char*, 20> kSmall = {
    "zero",    "one",     "two",       "three",    "four",     "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
const std::array<const char*, 10> kTens = {"",      "",      "twenty",  "thirty", "forty",
                                           "fifty", "sixty", "seventy", "eighty", "ninety"};

std::string below_thousand(int n) {
  std::string out;
  if (n >= 100) {
    out = std::string(kSmall[n / 100]) + " hundred";
    n %= 100;
    if (n == 0) return out;
    out += " and ";
  }
  if (n < 20) return out + kSmall[n];
  out += kTens[n / 10];
  if (n % 10 != 0) out += std::string("-") + kSmall[n % 10];
  return out;
}

struct Currency {
  const char* code;
  std::vector<const char*> prefixes;  // written directly before the number
  std::vector<const char*> names;
};

const std::vector<Currency>& currencies() {
  static const std::vector<Currency> table = {
      {"USD", {"$", "US$", "U.S.$", "USD "}, {"dollars", "US dollars"}},
      {"EUR", {"\xe2\x82\xac", "EUR "}, {"euros"}},
      {"GBP", {"\xc2\xa3", "GBP "}, {"pounds", "pounds sterling"}},
      {"JPY", {"\xc2\xa5", "JPY "}, {"yen"}},
      {"CAD", {"C$", "CAD "}, {"Canadian dollars"}},
      {"AUD", {"A$", "AUD "}, {"Australian dollars"}},
      {"HKD", {"HK$"}, {"Hong Kong dollars"}},
      {"CHF", {"CHF "}, {"Swiss francs"}},
      {"INR", {"Rs ", "\xe2\x82\xb9"}, {"rupees"}},
      {"SEK", {"SEK "}, {"Swedish kronor"}},
      {"ZAR", {"ZAR "}, {"rand"}},
  };
  return table;
}

// Canonical decimal string of digits * 10^-scale.
std::string canonical(std::string digits, int scale) {
  while (scale < 0) {
    digits.push_back('0');
    ++scale;
  }
  while (scale > 0 && digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
    --scale;
  }
  if (scale > 0 && digits.back() == '0') scale = 0;
  while (digits.size() > 1 && digits.front() == '0' &&
         static_cast<int>(digits.size()) > scale + 1) {
    digits.erase(digits.begin());
  }
  if (scale == 0) return digits;
  while (static_cast<int>(digits.size()) <= scale) digits.insert(digits.begin(), '0');
  return digits.substr(0, digits.size() - scale) + "." + digits.substr(digits.size() - scale);
}

std::string group_thousands(const std::string& digits) {
  std::string out;
  const int n = static_cast<int>(digits.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

}  // namespace

std::string number_words(long long n) {
  std::string out;
  const std::array<std::pair<long long, const char*>, 2> scales = {
      std::pair<long long, const char*>{1000000, "million"}, {1000, "thousand"}};
  for (auto [value, name] : scales) {
    if (n >= value) {
      if (!out.empty()) out += " ";
      out += below_thousand(static_cast<int>(n / value)) + " " + name;
      n %= value;
    }
  }
  if (n > 0 || out.empty()) {
    if (!out.empty()) out += " ";
    out += below_thousand(static_cast<int>(n));
  }
  return out;
}

MoneyExpression generate_money_expression(std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto& cur = currencies()[pick(currencies().size())];
  const std::array<std::pair<const char*, int>, 6> magnitudes = {
      std::pair<const char*, int>{"", 0}, {" thousand", 3}, {" million", 6},
      {" billion", 9},                    {"bn", 9},        {"mln", 6}};

  MoneyExpression e;
  e.currency = cur.code;
  const int form = static_cast<int>(pick(4));
  if (form == 3) {
    // Spelled-out amount followed by a currency name.
    const long long n = 1 + static_cast<long long>(pick(999));
    const int m = static_cast<int>(pick(4));
    std::string text = number_words(n);
    int exponent = 0;
    if (m > 0) {
      text += magnitudes[m].first;
      exponent = magnitudes[m].second;
    }
    e.text = text + " " + cur.names[pick(cur.names.size())];
    e.expected_amount = canonical(std::to_string(n), -exponent);
    return e;
  }

  // Numeral: integer part, optional fraction, optional grouping.
  const std::string integer = std::to_string(1 + pick(form == 0 ? 999999 : 999));
  std::string fraction;
  const std::size_t fraction_digits = pick(4);
  for (std::size_t k = 0; k < fraction_digits; ++k) fraction.push_back(static_cast<char>('0' + pick(10)));
  std::string numeral = (pick(2) == 0 ? group_thousands(integer) : integer);
  if (!fraction.empty()) numeral += "." + fraction;
  const auto& mag = magnitudes[form == 0 ? 0 : pick(magnitudes.size())];
  numeral += mag.first;
  e.expected_amount =
      canonical(integer + fraction, static_cast<int>(fraction.size()) - mag.second);

  if (form == 0 || form == 1) {
    e.text = std::string(cur.prefixes[pick(cur.prefixes.size())]) + numeral;
  } else {
    const bool code = pick(2) == 0;
    e.text = numeral + " " + (code ? std::string(cur.code) : std::string(cur.names[pick(cur.names.size())]));
  }
  return e;
}

}  // namespace evkb::testing

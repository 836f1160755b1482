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

#include "evkb/annotate/dates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <string>

#include "evkb/core/text.hpp"

namespace evkb::annotate {
namespace {

namespace chr = std::chrono;

const std::string kMonth =
    "(January|February|March|April|May|June|July|August|September|October|November|December|"
    "Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sept|Sep|Oct|Nov|Dec)";
const std::string kFullMonth =
    "(January|February|March|April|May|June|July|August|September|October|November|December)";
const std::string kCount =
    "(a|an|one|two|three|four|five|six|seven|eight|nine|ten|eleven|twelve|\\d{1,3})";

unsigned month_number(std::string_view name) {
  static const std::array<std::string_view, 12> prefixes = {
      "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};
  std::string lower = ascii_lower(name.substr(0, 3));
  for (unsigned i = 0; i < prefixes.size(); ++i) {
    if (lower == prefixes[i]) return i + 1;
  }
  return 0;
}

int count_value(const std::string& text) {
  static const std::map<std::string, int> words = {
      {"a", 1},    {"an", 1},   {"one", 1},   {"two", 2},   {"three", 3},   {"four", 4},
      {"five", 5}, {"six", 6},  {"seven", 7}, {"eight", 8}, {"nine", 9},    {"ten", 10},
      {"eleven", 11}, {"twelve", 12}};
  std::string lower = ascii_lower(text);
  if (auto it = words.find(lower); it != words.end()) return it->second;
  return std::stoi(lower);
}

chr::year_month shift_months(chr::year_month ym, int months) {
  return ym + chr::months{months};
}

// Year for a month (and day) mentioned without one: the latest occurrence
// not after publication.
int infer_year(const Date& published, unsigned month, unsigned day) {
  int year = year_of(published);
  const unsigned pm = month_of(published);
  const unsigned pd = day_of(published);
  if (month > pm || (month == pm && day > pd)) --year;
  return year;
}

struct Resolved {
  Date date;
  Granularity granularity;
  bool relative;
};

using Resolver = std::function<std::optional<Resolved>(const std::smatch&, const Date&, bool*)>;

struct Pattern {
  std::regex regex;
  Resolver resolve;
};

std::optional<Resolved> checked(int year, unsigned month, unsigned day, Granularity g,
                                bool relative, bool* invalid) {
  Date d{chr::year{year}, chr::month{month}, chr::day{day}};
  if (!d.ok()) {
    *invalid = true;
    return std::nullopt;
  }
  return Resolved{d, g, relative};
}

int expand_year(const std::string& text) {
  int y = std::stoi(text);
  if (text.size() == 2) y += y < 69 ? 2000 : 1900;
  return y;
}

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> table = [] {
    const auto icase = std::regex::ECMAScript | std::regex::icase;
    std::vector<Pattern> p;
    // 2004-10-26
    p.push_back({std::regex(R"(\b(\d{4})-(\d{2})-(\d{2})\b)"),
                 [](const std::smatch& m, const Date&, bool* bad) {
                   return checked(std::stoi(m[1]), std::stoul(m[2]), std::stoul(m[3]),
                                  Granularity::day, false, bad);
                 }});
    // 10/26/2004, 10/26/04
    p.push_back({std::regex(R"(\b(\d{1,2})/(\d{1,2})/(\d{4}|\d{2})\b)"),
                 [](const std::smatch& m, const Date&, bool* bad) {
                   return checked(expand_year(m[3]), std::stoul(m[1]), std::stoul(m[2]),
                                  Granularity::day, false, bad);
                 }});
    // October 26, 2004
    p.push_back({std::regex("\\b" + kMonth + R"(\.?\s+(\d{1,2})(?:st|nd|rd|th)?,?\s+(\d{4})\b)",
                            icase),
                 [](const std::smatch& m, const Date&, bool* bad) {
                   return checked(std::stoi(m[3]), month_number(m[1].str()), std::stoul(m[2]),
                                  Granularity::day, false, bad);
                 }});
    // 26 October 2004
    p.push_back({std::regex(R"(\b(\d{1,2})\s+)" + kMonth + R"(\.?,?\s+(\d{4})\b)", icase),
                 [](const std::smatch& m, const Date&, bool* bad) {
                   return checked(std::stoi(m[3]), month_number(m[2].str()), std::stoul(m[1]),
                                  Granularity::day, false, bad);
                 }});
    // October 2004
    p.push_back({std::regex("\\b" + kMonth + R"(\.?,?\s+(?:of\s+)?(\d{4})\b)", icase),
                 [](const std::smatch& m, const Date&, bool* bad) {
                   return checked(std::stoi(m[2]), month_number(m[1].str()), 1,
                                  Granularity::month, false, bad);
                 }});
    // October 26
    p.push_back({std::regex("\\b" + kMonth + R"(\.?\s+(\d{1,2})(?:st|nd|rd|th)?\b(?![,.]?\d))",
                            icase),
                 [](const std::smatch& m, const Date& pub, bool* bad) {
                   const unsigned month = month_number(m[1].str());
                   const unsigned day = std::stoul(m[2]);
                   return checked(infer_year(pub, month, day), month, day, Granularity::day,
                                  false, bad);
                 }});
    // yesterday / today / tomorrow
    p.push_back({std::regex(R"(\b(yesterday|today|tomorrow)\b)", icase),
                 [](const std::smatch& m, const Date& pub, bool*) -> std::optional<Resolved> {
                   const std::string w = ascii_lower(m[1].str());
                   int delta = w == "yesterday" ? -1 : (w == "tomorrow" ? 1 : 0);
                   return Resolved{Date{chr::sys_days{pub} + chr::days{delta}}, Granularity::day,
                                   true};
                 }});
    // three weeks ago
    p.push_back({std::regex("\\b" + kCount + R"(\s+(day|week|month|year)s?\s+ago\b)", icase),
                 [](const std::smatch& m, const Date& pub, bool*) -> std::optional<Resolved> {
                   const int n = count_value(m[1].str());
                   const std::string unit = ascii_lower(m[2].str());
                   if (unit == "day" || unit == "week") {
                     const int days = unit == "day" ? n : 7 * n;
                     return Resolved{Date{chr::sys_days{pub} - chr::days{days}},
                                     Granularity::day, true};
                   }
                   if (unit == "month") {
                     auto ym = shift_months(pub.year() / pub.month(), -n);
                     return Resolved{Date{ym / chr::day{1}}, Granularity::month, true};
                   }
                   return Resolved{make_date(year_of(pub) - n, 1, 1), Granularity::year, true};
                 }});
    // last week, this month, next year
    p.push_back({std::regex(R"(\b(last|this|next)\s+(week|month|year)\b)", icase),
                 [](const std::smatch& m, const Date& pub, bool*) -> std::optional<Resolved> {
                   const std::string which = ascii_lower(m[1].str());
                   const std::string unit = ascii_lower(m[2].str());
                   const int delta = which == "last" ? -1 : (which == "next" ? 1 : 0);
                   if (unit == "week") {
                     return Resolved{Date{chr::sys_days{pub} + chr::days{7 * delta}},
                                     Granularity::day, true};
                   }
                   if (unit == "month") {
                     auto ym = shift_months(pub.year() / pub.month(), delta);
                     return Resolved{Date{ym / chr::day{1}}, Granularity::month, true};
                   }
                   return Resolved{make_date(year_of(pub) + delta, 1, 1), Granularity::year, true};
                 }});
    // in October (full month names only; "May" needs a temporal preposition)
    p.push_back({std::regex(std::string(R"((?:\b(in|since|during|by|until|through|of|last|early|late|mid|)"
                            R"(this|next|before|after)[\s-]+)?)") +
                                "\\b" + kFullMonth + "\\b",
                            icase),
                 [](const std::smatch& m, const Date& pub, bool*) -> std::optional<Resolved> {
                   const unsigned month = month_number(m[2].str());
                   if (!std::isupper(static_cast<unsigned char>(m[2].str()[0]))) {
                     return std::nullopt;
                   }
                   if (month == 5 && !m[1].matched) return std::nullopt;
                   return Resolved{make_date(infer_year(pub, month, 1), month, 1),
                                   Granularity::month, false};
                 }});
    // 2004 (not part of an amount)
    p.push_back({std::regex(R"(\b(19\d{2}|20\d{2})\b)"),
                 [](const std::smatch& m, const Date&, bool*) -> std::optional<Resolved> {
                   return Resolved{make_date(std::stoi(m[1]), 1, 1), Granularity::year, false};
                 }});
    return p;
  }();
  return table;
}

bool is_money_context(std::string_view text, std::size_t begin, std::size_t end) {
  if (begin > 0 && (text[begin - 1] == '.' || text[begin - 1] == ',')) return true;
  std::size_t b = begin;
  while (b > 0 && text[b - 1] == ' ') --b;
  for (std::string_view sign : {"$", "€", "£", "¥", "₹", "₩"}) {
    if (text.substr(0, b).ends_with(sign)) return true;
  }
  std::size_t e = end;
  if (e < text.size() && (text[e] == '.' || text[e] == ',') && e + 1 < text.size() &&
      std::isdigit(static_cast<unsigned char>(text[e + 1]))) {
    return true;
  }
  while (e < text.size() && text[e] == ' ') ++e;
  std::size_t w = e;
  while (w < text.size() && std::isalpha(static_cast<unsigned char>(text[w]))) ++w;
  static const std::array<std::string_view, 13> units = {
      "million", "billion", "thousand", "trillion", "dollars", "euros", "pounds",
      "yen",     "shares",  "employees", "workers",  "jobs",    "percent"};
  const std::string next = ascii_lower(text.substr(e, w - e));
  for (auto u : units) {
    if (next == u) return true;
  }
  return false;
}

}  // namespace

std::vector<DateMention> extract_dates(std::string_view sentence, const Date& published,
                                       Diagnostics* diagnostics) {
  const std::string text(sentence);
  std::vector<DateMention> found;
  // Invalid dates still claim their text so shorter patterns cannot reread
  // "February 30, 2005" as "2005".
  std::vector<Span> rejected;
  auto overlaps_found = [&](const Span& span) {
    for (const auto& d : found) {
      if (d.char_span.overlaps(span)) return true;
    }
    for (const auto& r : rejected) {
      if (r.overlaps(span)) return true;
    }
    return false;
  };
  const auto& table = patterns();
  for (std::size_t p = 0; p < table.size(); ++p) {
    const bool bare_year = p + 1 == table.size();
    for (auto it = std::sregex_iterator(text.begin(), text.end(), table[p].regex);
         it != std::sregex_iterator(); ++it) {
      const std::smatch& m = *it;
      Span span{static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0))};
      if (overlaps_found(span)) continue;
      if (bare_year && is_money_context(sentence, span.begin, span.end)) continue;
      bool invalid = false;
      std::optional<Resolved> r = table[p].resolve(m, published, &invalid);
      if (invalid) {
        report(diagnostics, {"", 0, "invalid calendar date '" + m.str(0) + "' skipped"});
        rejected.push_back(span);
        continue;
      }
      if (!r) continue;
      found.push_back({r->date, r->granularity, span, r->relative});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const DateMention& a, const DateMention& b) {
              return a.char_span.begin < b.char_span.begin;
            });
  return found;
}

}  // namespace evkb::annotate

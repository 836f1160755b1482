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

#include "evkb/core/date.hpp"

#include <charconv>
#include <cstdio>

namespace evkb {
namespace {

bool parse_digits(std::string_view text, int* out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
  return Date{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
}

int year_of(const Date& date) { return static_cast<int>(date.year()); }
unsigned month_of(const Date& date) { return static_cast<unsigned>(date.month()); }
unsigned day_of(const Date& date) { return static_cast<unsigned>(date.day()); }

std::optional<Date> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0, m = 0, d = 0;
  if (!parse_digits(text.substr(0, 4), &y) || !parse_digits(text.substr(5, 2), &m) ||
      !parse_digits(text.substr(8, 2), &d)) {
    return std::nullopt;
  }
  Date date = make_date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_iso_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year_of(date), month_of(date), day_of(date));
  return buf;
}

GranularDate at_granularity(const Date& date, Granularity granularity) {
  switch (granularity) {
    case Granularity::year:
      return {make_date(year_of(date), 1, 1), granularity};
    case Granularity::month:
      return {make_date(year_of(date), month_of(date), 1), granularity};
    case Granularity::day:
      break;
  }
  return {date, Granularity::day};
}

std::string format_granular(const GranularDate& date) {
  std::string iso = format_iso_date(date.date);
  switch (date.granularity) {
    case Granularity::year:
      return iso.substr(0, 4);
    case Granularity::month:
      return iso.substr(0, 7);
    case Granularity::day:
      break;
  }
  return iso;
}

std::optional<GranularDate> parse_granular(std::string_view text) {
  int y = 0, m = 0;
  if (text.size() == 4) {
    if (!parse_digits(text, &y)) return std::nullopt;
    return GranularDate{make_date(y, 1, 1), Granularity::year};
  }
  if (text.size() == 7 && text[4] == '-') {
    if (!parse_digits(text.substr(0, 4), &y) || !parse_digits(text.substr(5, 2), &m)) {
      return std::nullopt;
    }
    Date date = make_date(y, static_cast<unsigned>(m), 1);
    if (!date.ok()) return std::nullopt;
    return GranularDate{date, Granularity::month};
  }
  if (auto date = parse_iso_date(text)) return GranularDate{*date, Granularity::day};
  return std::nullopt;
}

std::string_view granularity_name(Granularity granularity) {
  switch (granularity) {
    case Granularity::day:
      return "day";
    case Granularity::month:
      return "month";
    case Granularity::year:
      return "year";
  }
  return "day";
}

std::optional<Granularity> parse_granularity(std::string_view name) {
  if (name == "day") return Granularity::day;
  if (name == "month") return Granularity::month;
  if (name == "year") return Granularity::year;
  return std::nullopt;
}

bool same_at(const Date& a, const Date& b, Granularity granularity) {
  if (a.year() != b.year()) return false;
  if (granularity == Granularity::year) return true;
  if (a.month() != b.month()) return false;
  if (granularity == Granularity::month) return true;
  return a.day() == b.day();
}

}  // namespace evkb

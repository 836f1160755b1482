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

#ifndef EVKB_CORE_DATE_HPP_
#define EVKB_CORE_DATE_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace evkb {

using Date = std::chrono::year_month_day;

enum class Granularity { day, month, year };

// A calendar date known only up to `granularity`. Month dates are stored on
// day 1 and year dates on January 1.
struct GranularDate {
  Date date;
  Granularity granularity = Granularity::day;

  friend bool operator==(const GranularDate&, const GranularDate&) = default;
};

Date make_date(int year, unsigned month, unsigned day);

int year_of(const Date& date);
unsigned month_of(const Date& date);
unsigned day_of(const Date& date);

// "YYYY-MM-DD"; nullopt unless the text is exactly a valid date.
std::optional<Date> parse_iso_date(std::string_view text);
std::string format_iso_date(const Date& date);

// Truncates `date` to the start of its granularity period.
GranularDate at_granularity(const Date& date, Granularity granularity);

// "2004", "2004-10" or "2004-10-26" depending on granularity.
std::string format_granular(const GranularDate& date);
std::optional<GranularDate> parse_granular(std::string_view text);

std::string_view granularity_name(Granularity granularity);
std::optional<Granularity> parse_granularity(std::string_view name);

// True iff both dates agree on every field down to `granularity`.
bool same_at(const Date& a, const Date& b, Granularity granularity);

}  // namespace evkb

#endif  // EVKB_CORE_DATE_HPP_

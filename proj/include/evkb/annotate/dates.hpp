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

#ifndef EVKB_ANNOTATE_DATES_HPP_
#define EVKB_ANNOTATE_DATES_HPP_

#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"
#include "evkb/core/error.hpp"

namespace evkb::annotate {

// Finds absolute and relative date expressions and resolves them against
// the publication date. Numeric dates are read month first ("3/4/2005" is
// March 4). A month or month-day without a year resolves to the most recent
// occurrence not after publication. Matches never overlap; longer patterns
// win. Invalid calendar dates are reported and skipped.
std::vector<DateMention> extract_dates(std::string_view sentence, const Date& published,
                                       Diagnostics* diagnostics = nullptr);

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_DATES_HPP_

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

#ifndef EVKB_IO_RECORDS_HPP_
#define EVKB_IO_RECORDS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "evkb/annotate/types.hpp"
#include "evkb/core/error.hpp"
#include "evkb/events/events.hpp"
#include "evkb/selection/selection.hpp"

// Line-delimited JSON records exchanged between pipeline stages. Amounts
// are decimal strings so they survive the round trip exactly.
namespace evkb::io {

using json = nlohmann::json;

json to_json(const annotate::MonetaryValue& value);
annotate::MonetaryValue monetary_value_from_json(const json& j);

json to_json(const annotate::AnnotatedSentence& sentence);
annotate::AnnotatedSentence annotated_sentence_from_json(const json& j);

json to_json(const events::CandidateQuintuple& candidate);
events::CandidateQuintuple candidate_from_json(const json& j);

json to_json(const selection::SelectionResult& result);
selection::SelectionResult selection_from_json(const json& j);

// Writes one compact record per line. Throws DataError if the file cannot
// be written.
void write_lines(const std::filesystem::path& path, const std::vector<json>& records);

// Readers skip malformed lines with a diagnostic and throw DataError if
// the file cannot be read.
std::vector<annotate::AnnotatedSentence> read_annotated(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics = nullptr);
std::vector<events::CandidateQuintuple> read_candidates(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics = nullptr);
std::vector<selection::SelectionResult> read_selections(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics = nullptr);

}  // namespace evkb::io

#endif  // EVKB_IO_RECORDS_HPP_

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

#ifndef EVKB_CORPUS_CORPUS_HPP_
#define EVKB_CORPUS_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "evkb/core/date.hpp"
#include "evkb/core/error.hpp"
#include "evkb/core/text.hpp"

namespace evkb::corpus {

struct Document {
  std::string doc_id;
  Date published;
  std::string title;
  std::string body;
  std::vector<std::string> descriptors;
  std::size_t word_count = 0;

  bool has_descriptor(std::string_view descriptor) const;
};

struct Sentence {
  std::string sentence_id;
  std::string doc_id;
  std::size_t order_index = 0;
  std::string text;
  Span char_span;  // byte offsets into Document::body
};

// Streams documents from a line-delimited corpus file. Malformed records
// are skipped with a diagnostic naming the line; an unreadable file throws
// DataError on construction.
class CorpusReader {
 public:
  explicit CorpusReader(const std::filesystem::path& path, Diagnostics* diagnostics = nullptr);

  std::optional<Document> next();

 private:
  std::string source_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
  Diagnostics* diagnostics_;
  std::unordered_set<std::string> seen_ids_;
};

std::vector<Document> load_corpus(const std::filesystem::path& path,
                                  Diagnostics* diagnostics = nullptr);

// Parses one corpus record; throws DataError describing the defect.
Document parse_document(std::string_view line);
std::string serialize_document(const Document& doc);

// Rule-based splitter: a sentence ends at [.?!] (plus closing quotes or
// brackets) followed by whitespace and an uppercase letter, digit or
// opening quote, unless the period closes a known abbreviation or a
// single-letter initial. Blank lines always end a sentence.
std::vector<Sentence> segment_sentences(const Document& doc);

std::string make_sentence_id(std::string_view doc_id, std::size_t order_index);

}  // namespace evkb::corpus

#endif  // EVKB_CORPUS_CORPUS_HPP_

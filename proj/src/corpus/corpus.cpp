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

#include "evkb/corpus/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "json.hpp"

namespace evkb::corpus {
namespace {

using nlohmann::json;

// Lowercased tokens (with their final period) after which a period does
// not end a sentence.
constexpr std::array<std::string_view, 42> kAbbreviations = {
    "inc.",  "corp.", "co.",   "ltd.",  "llc.",  "plc.",  "bros.", "mr.",   "mrs.",
    "ms.",   "dr.",   "st.",   "jr.",   "sr.",   "gov.",  "sen.",  "rep.",  "gen.",
    "prof.", "u.s.",  "u.k.",  "u.n.",  "e.u.",  "p.m.",  "a.m.",  "no.",   "vs.",
    "e.g.",  "i.e.",  "jan.",  "feb.",  "mar.",  "apr.",  "jun.",  "jul.",  "aug.",
    "sep.",  "sept.", "oct.",  "nov.",  "dec.",  "approx."};

bool is_closing(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_opening(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

bool starts_with_any(std::string_view text, std::size_t pos,
                     std::initializer_list<std::string_view> options) {
  for (auto o : options) {
    if (text.substr(pos, o.size()) == o) return true;
  }
  return false;
}

// The whitespace-delimited word that ends at `period` (inclusive).
std::string word_ending_at(std::string_view body, std::size_t period) {
  std::size_t b = period;
  while (b > 0 && !is_ascii_space(body[b - 1]) && !is_opening(body[b - 1])) --b;
  return ascii_lower(body.substr(b, period + 1 - b));
}

bool suppresses_break(std::string_view body, std::size_t period) {
  std::string word = word_ending_at(body, period);
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end()) {
    return true;
  }
  // Single-letter initial such as "R." in "Jan R. Smith".
  return word.size() == 2 && std::isalpha(static_cast<unsigned char>(word[0])) &&
         std::isupper(static_cast<unsigned char>(body[period - 1]));
}

bool is_sentence_start(std::string_view body, std::size_t pos) {
  if (pos >= body.size()) return true;
  const unsigned char c = static_cast<unsigned char>(body[pos]);
  if (std::isupper(c) || std::isdigit(c) || is_opening(body[pos]) || body[pos] == '$') return true;
  return starts_with_any(body, pos, {"“", "‘", "€", "£"});
}

}  // namespace

bool Document::has_descriptor(std::string_view descriptor) const {
  std::string wanted = ascii_lower(descriptor);
  return std::any_of(descriptors.begin(), descriptors.end(),
                     [&](const std::string& d) { return ascii_lower(d) == wanted; });
}

Document parse_document(std::string_view line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid record syntax: ") + e.what());
  }
  if (!record.is_object()) throw DataError("record is not an object");

  auto require_string = [&](const char* key) -> std::string {
    auto it = record.find(key);
    if (it == record.end()) throw DataError(std::string("missing field '") + key + "'");
    if (!it->is_string()) throw DataError(std::string("field '") + key + "' is not a string");
    return it->get<std::string>();
  };

  Document doc;
  doc.doc_id = require_string("id");
  if (doc.doc_id.empty()) throw DataError("empty document id");
  std::string published = require_string("published");
  auto date = parse_iso_date(published);
  if (!date) throw DataError("invalid publication date '" + published + "'");
  doc.published = *date;
  if (auto it = record.find("title"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError("field 'title' is not a string");
    doc.title = it->get<std::string>();
  }
  doc.body = require_string("body");
  if (auto it = record.find("descriptors"); it != record.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError("field 'descriptors' is not a list");
    for (const auto& d : *it) {
      if (!d.is_string()) throw DataError("descriptor is not a string");
      doc.descriptors.push_back(d.get<std::string>());
    }
  }
  if (auto it = record.find("word_count"); it != record.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<long long>() < 0) {
      throw DataError("field 'word_count' is not a non-negative integer");
    }
    doc.word_count = it->get<std::size_t>();
  } else {
    doc.word_count = count_whitespace_tokens(doc.body);
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json record = {{"id", doc.doc_id},
                 {"published", format_iso_date(doc.published)},
                 {"title", doc.title},
                 {"body", doc.body},
                 {"descriptors", doc.descriptors},
                 {"word_count", doc.word_count}};
  return record.dump();
}

CorpusReader::CorpusReader(const std::filesystem::path& path, Diagnostics* diagnostics)
    : source_(path.string()), in_(path), diagnostics_(diagnostics) {
  if (!in_) throw DataError("cannot read corpus file " + source_);
}

std::optional<Document> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (trim(line).empty()) continue;
    try {
      Document doc = parse_document(line);
      if (!seen_ids_.insert(doc.doc_id).second) {
        throw DataError("duplicate document id '" + doc.doc_id + "'");
      }
      return doc;
    } catch (const DataError& e) {
      report(diagnostics_, {source_, line_no_, e.what()});
    }
  }
  if (in_.bad()) throw DataError("read error in corpus file " + source_);
  return std::nullopt;
}

std::vector<Document> load_corpus(const std::filesystem::path& path, Diagnostics* diagnostics) {
  CorpusReader reader(path, diagnostics);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

std::string make_sentence_id(std::string_view doc_id, std::size_t order_index) {
  return std::string(doc_id) + "#" + std::to_string(order_index);
}

std::vector<Sentence> segment_sentences(const Document& doc) {
  std::vector<Sentence> sentences;
  std::string_view body = doc.body;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view piece = body.substr(begin, end - begin);
    std::string_view trimmed = trim(piece);
    if (trimmed.empty()) return;
    std::size_t b = begin + static_cast<std::size_t>(trimmed.data() - piece.data());
    Sentence s;
    s.doc_id = doc.doc_id;
    s.order_index = sentences.size();
    s.sentence_id = make_sentence_id(doc.doc_id, s.order_index);
    s.char_span = {b, b + trimmed.size()};
    s.text = std::string(trimmed);
    sentences.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < body.size() && (body[j] == ' ' || body[j] == '\t' || body[j] == '\r')) ++j;
      if (j < body.size() && body[j] == '\n') {
        emit(start, i);
        start = j;
        i = j;
        continue;
      }
    }
    if (c == '.' || c == '?' || c == '!') {
      std::size_t end = i + 1;
      while (end < body.size() &&
             (body[end] == '.' || body[end] == '?' || body[end] == '!' || is_closing(body[end]))) {
        ++end;
      }
      while (starts_with_any(body, end, {"”", "’"})) end += 3;
      if (end >= body.size()) break;
      if (!is_ascii_space(body[end])) {
        i = end;
        continue;
      }
      std::size_t next = end;
      while (next < body.size() && is_ascii_space(body[next])) ++next;
      const bool abbreviation = c == '.' && end == i + 1 && suppresses_break(body, i);
      if (!abbreviation && is_sentence_start(body, next)) {
        emit(start, end);
        start = end;
      }
      i = next;
      continue;
    }
    ++i;
  }
  emit(start, body.size());
  return sentences;
}

}  // namespace evkb::corpus

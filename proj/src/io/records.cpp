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

#include "evkb/io/records.hpp"

#include <fstream>
#include <functional>

namespace evkb::io {
namespace {

json span_json(const Span& s) { return json::array({s.begin, s.end}); }

Span span_from(const json& j) {
  Span s{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
  if (s.end < s.begin) throw DataError("inverted span");
  return s;
}

Date date_from(const json& j) {
  auto d = parse_iso_date(j.get<std::string>());
  if (!d) throw DataError("invalid date: " + j.dump());
  return *d;
}

GranularDate granular_from(const json& j) {
  auto d = parse_granular(j.get<std::string>());
  if (!d) throw DataError("invalid date: " + j.dump());
  return *d;
}

Decimal decimal_from(const json& j) {
  auto d = Decimal::parse(j.get<std::string>());
  if (!d) throw DataError("invalid amount: " + j.dump());
  return *d;
}

annotate::Tense tense_from(const json& j) {
  auto t = annotate::parse_tense(j.get<std::string>());
  if (!t) throw DataError("invalid tense: " + j.dump());
  return *t;
}

json coverage_json(const entities::UriCoverage& c) {
  return {{"dbpedia", c.dbpedia}, {"freebase", c.freebase}, {"crunchbase", c.crunchbase}};
}

entities::UriCoverage coverage_from(const json& j) {
  return {j.at("dbpedia").get<bool>(), j.at("freebase").get<bool>(),
          j.at("crunchbase").get<bool>()};
}

json mention_json(const annotate::EntityMention& m) {
  json j = {{"entity_id", m.entity_id},
            {"span", span_json(m.char_span)},
            {"coverage", coverage_json(m.coverage)}};
  if (m.role) j["role"] = *m.role == annotate::Role::subject ? "subject" : "object";
  return j;
}

annotate::EntityMention mention_from(const json& j) {
  annotate::EntityMention m;
  m.entity_id = j.at("entity_id").get<std::string>();
  m.char_span = span_from(j.at("span"));
  m.coverage = coverage_from(j.at("coverage"));
  if (j.contains("role")) {
    const auto role = j.at("role").get<std::string>();
    if (role == "subject") {
      m.role = annotate::Role::subject;
    } else if (role == "object") {
      m.role = annotate::Role::object;
    } else {
      throw DataError("invalid role: " + role);
    }
  }
  return m;
}

template <typename T>
std::vector<T> read_lines(const std::filesystem::path& path,
                          const std::function<T(const json&)>& parse, Diagnostics* diagnostics) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<T> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(json::parse(line)));
    } catch (const std::exception& e) {
      report(diagnostics, {path.string(), line_no, std::string("skipped record: ") + e.what()});
    }
  }
  return out;
}

}  // namespace

json to_json(const annotate::MonetaryValue& v) {
  return {{"amount", v.amount.to_string()},
          {"currency", v.currency},
          {"span", span_json(v.char_span)},
          {"text", v.raw_text}};
}

annotate::MonetaryValue monetary_value_from_json(const json& j) {
  annotate::MonetaryValue v;
  v.amount = decimal_from(j.at("amount"));
  v.currency = j.at("currency").get<std::string>();
  v.char_span = span_from(j.at("span"));
  v.raw_text = j.value("text", "");
  if (!v.amount.is_positive()) throw DataError("amount must be positive");
  return v;
}

json to_json(const annotate::AnnotatedSentence& s) {
  json values = json::array();
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    json v = to_json(s.values[i]);
    v["in_arg"] = i < s.value_in_predicate_arg.size() && s.value_in_predicate_arg[i];
    values.push_back(std::move(v));
  }
  json dates = json::array();
  for (std::size_t i = 0; i < s.dates.size(); ++i) {
    const auto& d = s.dates[i];
    dates.push_back({{"date", format_granular(d.granular())},
                     {"span", span_json(d.char_span)},
                     {"relative", d.is_relative},
                     {"in_arg", i < s.date_in_predicate_arg.size() && s.date_in_predicate_arg[i]}});
  }
  return {{"sentence_id", s.sentence_id},
          {"doc_id", s.doc_id},
          {"order", s.order_index},
          {"text", s.text},
          {"published", format_iso_date(s.published)},
          {"sentence_length", s.sentence_length},
          {"article_length", s.article_length},
          {"business_desk", s.business_desk},
          {"values", std::move(values)},
          {"dates", std::move(dates)},
          {"predicate",
           {{"label", s.predicate.label},
            {"class", s.predicate_class},
            {"is_noun", s.predicate.is_noun},
            {"tense", annotate::tense_name(s.predicate.tense)},
            {"span", span_json(s.predicate.char_span)},
            {"frequency", s.predicate_frequency}}},
          {"subject", mention_json(s.subject)},
          {"object", mention_json(s.object)},
          {"value_in_correct_arg", s.value_in_correct_arg},
          {"date_in_correct_arg", s.date_in_correct_arg}};
}

annotate::AnnotatedSentence annotated_sentence_from_json(const json& j) {
  annotate::AnnotatedSentence s;
  s.sentence_id = j.at("sentence_id").get<std::string>();
  s.doc_id = j.at("doc_id").get<std::string>();
  s.order_index = j.at("order").get<std::size_t>();
  s.text = j.at("text").get<std::string>();
  s.published = date_from(j.at("published"));
  s.sentence_length = j.at("sentence_length").get<std::size_t>();
  s.article_length = j.at("article_length").get<std::size_t>();
  s.business_desk = j.at("business_desk").get<bool>();
  for (const auto& v : j.at("values")) {
    s.values.push_back(monetary_value_from_json(v));
    s.value_in_predicate_arg.push_back(v.value("in_arg", false));
  }
  if (s.values.empty()) throw DataError("annotated sentence without monetary values");
  for (const auto& d : j.at("dates")) {
    const GranularDate g = granular_from(d.at("date"));
    s.dates.push_back({g.date, g.granularity, span_from(d.at("span")), d.value("relative", false)});
    s.date_in_predicate_arg.push_back(d.value("in_arg", false));
  }
  const json& p = j.at("predicate");
  s.predicate.label = p.at("label").get<std::string>();
  s.predicate.is_noun = p.at("is_noun").get<bool>();
  s.predicate.tense = tense_from(p.at("tense"));
  s.predicate.char_span = span_from(p.at("span"));
  s.predicate_class = p.value("class", "");
  s.predicate_frequency = p.value("frequency", 0.0);
  s.subject = mention_from(j.at("subject"));
  s.object = mention_from(j.at("object"));
  if (s.subject.entity_id == s.object.entity_id) throw DataError("subject equals object");
  s.value_in_correct_arg = j.at("value_in_correct_arg").get<bool>();
  s.date_in_correct_arg = j.at("date_in_correct_arg").get<bool>();
  return s;
}

json to_json(const events::CandidateQuintuple& c) {
  return {{"candidate_id", c.candidate_id},
          {"event", c.key.to_string()},
          {"subject", c.key.subject_id},
          {"predicate", c.predicate_label},
          {"predicate_class", c.key.predicate_class},
          {"object", c.key.object_id},
          {"value", to_json(c.value)},
          {"date", format_granular(c.date)},
          {"date_is_publication", c.date_is_publication},
          {"sentence_id", c.sentence_id},
          {"doc_id", c.doc_id},
          {"order", c.order_index},
          {"published", format_iso_date(c.published)},
          {"value_index", c.value_index},
          {"date_index", c.date_index},
          {"predicate_offset", c.predicate_offset},
          {"text", c.sentence_text},
          {"sentence_length", c.sentence_length},
          {"article_length", c.article_length},
          {"business_desk", c.business_desk},
          {"predicate_frequency", c.predicate_frequency},
          {"tense", annotate::tense_name(c.tense)},
          {"is_noun", c.is_noun_predicate},
          {"value_in_arg", c.value_in_arg},
          {"date_in_arg", c.date_in_arg},
          {"subject_coverage", coverage_json(c.subject_coverage)},
          {"object_coverage", coverage_json(c.object_coverage)}};
}

events::CandidateQuintuple candidate_from_json(const json& j) {
  events::CandidateQuintuple c;
  c.candidate_id = j.at("candidate_id").get<std::string>();
  auto key = events::EventKey::parse(j.at("event").get<std::string>());
  if (!key) throw DataError("invalid event key");
  c.key = *key;
  c.predicate_label = j.at("predicate").get<std::string>();
  c.value = monetary_value_from_json(j.at("value"));
  c.date = granular_from(j.at("date"));
  c.date_is_publication = j.at("date_is_publication").get<bool>();
  c.sentence_id = j.at("sentence_id").get<std::string>();
  c.doc_id = j.at("doc_id").get<std::string>();
  c.order_index = j.at("order").get<std::size_t>();
  c.published = date_from(j.at("published"));
  c.value_index = j.value("value_index", std::size_t{0});
  c.date_index = j.value("date_index", std::size_t{0});
  c.predicate_offset = j.value("predicate_offset", std::size_t{0});
  c.sentence_text = j.value("text", "");
  c.sentence_length = j.value("sentence_length", std::size_t{0});
  c.article_length = j.value("article_length", std::size_t{0});
  c.business_desk = j.value("business_desk", false);
  c.predicate_frequency = j.value("predicate_frequency", 0.0);
  c.tense = j.contains("tense") ? tense_from(j.at("tense")) : annotate::Tense::unknown;
  c.is_noun_predicate = j.value("is_noun", false);
  c.value_in_arg = j.value("value_in_arg", false);
  c.date_in_arg = j.value("date_in_arg", false);
  if (j.contains("subject_coverage")) c.subject_coverage = coverage_from(j.at("subject_coverage"));
  if (j.contains("object_coverage")) c.object_coverage = coverage_from(j.at("object_coverage"));
  return c;
}

json to_json(const selection::SelectionResult& r) {
  json j = {{"event", r.key.to_string()},
            {"method", selection::method_name(r.method)},
            {"confidence", r.confidence}};
  j["chosen"] = r.chosen ? to_json(*r.chosen) : json(nullptr);
  return j;
}

selection::SelectionResult selection_from_json(const json& j) {
  selection::SelectionResult r;
  auto key = events::EventKey::parse(j.at("event").get<std::string>());
  if (!key) throw DataError("invalid event key");
  r.key = *key;
  auto method = selection::parse_method(j.at("method").get<std::string>());
  if (!method) throw DataError("invalid selection method");
  r.method = *method;
  r.confidence = j.at("confidence").get<double>();
  if (!j.at("chosen").is_null()) r.chosen = candidate_from_json(j.at("chosen"));
  return r;
}

void write_lines(const std::filesystem::path& path, const std::vector<json>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& r : records) out << r.dump() << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

std::vector<annotate::AnnotatedSentence> read_annotated(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics) {
  return read_lines<annotate::AnnotatedSentence>(path, annotated_sentence_from_json, diagnostics);
}

std::vector<events::CandidateQuintuple> read_candidates(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics) {
  return read_lines<events::CandidateQuintuple>(path, candidate_from_json, diagnostics);
}

std::vector<selection::SelectionResult> read_selections(const std::filesystem::path& path,
                                                        Diagnostics* diagnostics) {
  return read_lines<selection::SelectionResult>(path, selection_from_json, diagnostics);
}

}  // namespace evkb::io

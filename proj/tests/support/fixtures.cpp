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

#include "fixtures.hpp"

#include <atomic>
#include <chrono>
#include <cmath>

#include <unistd.h>

namespace evkb::testing {

namespace fs = std::filesystem;

fs::path data_dir() { return EVKB_DATA_DIR; }

const oee::Ontology& shipped_ontology() {
  static const oee::Ontology ontology = oee::read_ontology(data_dir() / "ontology" / "oee.jsonl");
  return ontology;
}

const entities::EntityRepository& fixture_repository() {
  static const entities::EntityRepository repo = entities::EntityRepository::merge_records(
      entities::read_raw_entities(data_dir() / "fixtures" / "entities_source.jsonl"));
  return repo;
}

events::CandidateQuintuple make_candidate(const events::EventKey& key, std::string_view amount,
                                          const GranularDate& date, const Date& published,
                                          std::string doc_id, std::size_t order_index,
                                          std::string predicate) {
  events::CandidateQuintuple c;
  c.key = key;
  c.predicate_label = std::move(predicate);
  c.value.amount = *Decimal::parse(amount);
  c.value.currency = "USD";
  c.value.raw_text = "$" + std::string(amount);
  c.date = date;
  c.doc_id = std::move(doc_id);
  c.order_index = order_index;
  c.sentence_id = corpus::make_sentence_id(c.doc_id, order_index);
  c.published = published;
  c.sentence_length = 20;
  c.article_length = 600;
  c.business_desk = true;
  c.predicate_frequency = 0.1;
  c.tense = annotate::Tense::past;
  c.value_in_arg = true;
  c.date_in_arg = true;
  return c;
}

std::vector<events::CandidateQuintuple> table5_candidates() {
  const events::EventKey key{"oracle", "buy", "peoplesoft"};
  struct Row {
    const char* amount;
    int year;
    Date published;
    const char* doc;
    std::size_t order;
    const char* predicate;
  };
  const std::vector<Row> rows = {
      {"7300000000", 2003, make_date(2003, 11, 25), "t5-a", 2, "acquire"},
      {"7700000000", 2004, make_date(2004, 10, 26), "t5-b", 0, "acquisition"},
      {"7700000000", 2004, make_date(2004, 10, 26), "t5-b", 4, "acquisition"},
      {"1300000000", 2004, make_date(2005, 12, 23), "t5-c", 1, "acquire"},
      {"7038000000", 2004, make_date(2005, 12, 23), "t5-c", 3, "acquire"},
      {"10300000000", 2004, make_date(2007, 3, 1), "t5-d", 5, "acquire"},
      {"10300000000", 2005, make_date(2005, 6, 30), "t5-e", 1, "acquisition"},
      {"20000000000", 2007, make_date(2007, 3, 21), "t5-f", 0, "purchase"},
  };
  std::vector<events::CandidateQuintuple> out;
  for (const auto& r : rows) {
    auto c = make_candidate(key, r.amount, {make_date(r.year, 1, 1), Granularity::year},
                            r.published, r.doc, r.order, r.predicate);
    // Noun mentions carry the verb label they map to.
    if (c.predicate_label == "acquisition") {
      c.predicate_label = "acquire";
      c.is_noun_predicate = true;
    }
    c.candidate_id = key.to_string() + "~r" + std::to_string(out.size());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<corpus::Document> table1_documents() {
  auto doc = [](std::string id, Date published, std::string body) {
    corpus::Document d;
    d.doc_id = std::move(id);
    d.published = published;
    d.title = "Google and YouTube";
    d.body = std::move(body);
    d.descriptors = {"Business"};
    d.word_count = count_whitespace_tokens(d.body);
    return d;
  };
  return {
      doc("t1-1", make_date(2006, 10, 11),
          "Before Google agreed to buy YouTube for $1.65 billion in stock, it paid $1 billion "
          "for 5% of AOL."),
      doc("t1-2", make_date(2007, 2, 8), "Google bought YouTube in October for $1.65 billion."),
      doc("t1-3", make_date(2007, 4, 5),
          "YouTube was purchased by Google in November for $1.6 billion."),
  };
}

events::EventGroup random_event_group(std::mt19937_64& rng) {
  auto below = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  events::EventGroup g;
  g.key = {"s" + std::to_string(below(5)), "buy", "o" + std::to_string(below(5))};
  const int n_sentences = 1 + below(6);
  for (int i = 0; i < n_sentences; ++i) {
    annotate::AnnotatedSentence x;
    x.doc_id = "doc" + std::to_string(below(4));
    x.order_index = static_cast<std::size_t>(i);
    x.sentence_id = corpus::make_sentence_id(x.doc_id, x.order_index);
    x.published = make_date(2000 + below(10), 1 + below(12), 1 + below(28));
    x.predicate = {"acquire", false, annotate::Tense::past, {0, 7}};
    x.predicate_class = "buy";
    x.subject.entity_id = g.key.subject_id;
    x.object.entity_id = g.key.object_id;
    const int n_values = 1 + below(4);
    for (int v = 0; v < n_values; ++v) {
      annotate::MonetaryValue value;
      value.amount = Decimal::from_integer(1 + below(50)).shifted(6);
      value.currency = "USD";
      x.values.push_back(value);
      x.value_in_predicate_arg.push_back(below(2) == 0);
    }
    const int n_dates = below(4);
    for (int d = 0; d < n_dates; ++d) {
      annotate::DateMention date;
      const auto g = at_granularity(make_date(2000 + below(10), 1 + below(12), 1 + below(28)),
                                    static_cast<Granularity>(below(3)));
      date.date = g.date;
      date.granularity = g.granularity;
      x.dates.push_back(date);
      x.date_in_predicate_arg.push_back(below(2) == 0);
    }
    g.sentences.push_back(std::move(x));
  }
  return g;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  path_ = fs::temp_directory_path() /
          ("evkb-test-" + std::to_string(::getpid()) + "-" + std::to_string(stamp) + "-" +
           std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

Dataset separable_dataset(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Dataset d;
  while (static_cast<int>(d.x.size()) < n) {
    const double a = u(rng);
    const double b = u(rng);
    if (std::abs(a + b - 1.0) < 0.05) continue;
    d.x.push_back({a, b});
    d.y.push_back(a + b > 1.0 ? 1.0 : 0.0);
  }
  return d;
}

}  // namespace evkb::testing

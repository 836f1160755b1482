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

#ifndef EVKB_TESTS_SUPPORT_FIXTURES_HPP_
#define EVKB_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "evkb/corpus/corpus.hpp"
#include "evkb/entities/repository.hpp"
#include "evkb/events/events.hpp"
#include "evkb/oee/ontology.hpp"

namespace evkb::testing {

std::filesystem::path data_dir();

// Built ontology shipped under data/ontology.
const oee::Ontology& shipped_ontology();

// Repository merged from data/fixtures/entities_source.jsonl.
const entities::EntityRepository& fixture_repository();

// Oracle / PeopleSoft reports, one candidate per row, in row order.
std::vector<events::CandidateQuintuple> table5_candidates();

// The three Google / YouTube reports, one document each.
std::vector<corpus::Document> table1_documents();

// Event with 1-6 sentences of 1-4 values and 0-3 dates each.
events::EventGroup random_event_group(std::mt19937_64& rng);

struct Dataset {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
};

// Two features in [0,1]; label is 1 iff a + b > 1. Points within 0.05 of
// the boundary are skipped so the classes are separated by a margin.
Dataset separable_dataset(std::uint64_t seed, int n);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Candidate with every provenance field set from the arguments.
events::CandidateQuintuple make_candidate(const events::EventKey& key, std::string_view amount,
                                          const GranularDate& date, const Date& published,
                                          std::string doc_id, std::size_t order_index = 0,
                                          std::string predicate = "acquire");

}  // namespace evkb::testing

#endif  // EVKB_TESTS_SUPPORT_FIXTURES_HPP_

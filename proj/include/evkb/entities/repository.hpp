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

#ifndef EVKB_ENTITIES_REPOSITORY_HPP_
#define EVKB_ENTITIES_REPOSITORY_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/core/error.hpp"

namespace evkb::entities {

// Which knowledge bases an entity is linked to.
struct UriCoverage {
  bool dbpedia = false;
  bool freebase = false;
  bool crunchbase = false;

  friend bool operator==(const UriCoverage&, const UriCoverage&) = default;
};

UriCoverage coverage_of(const std::set<std::string>& uris);

struct EntityRecord {
  std::string entity_id;
  std::string canonical_name;
  std::set<std::string> surface_forms;
  std::set<std::string> uris;
  bool has_description = false;
  double prominence = 0.0;

  UriCoverage coverage() const { return coverage_of(uris); }

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

// One line of the repository source file.
struct RawEntity {
  std::string name;
  std::vector<std::string> uris;
  bool has_description = false;
  double prominence = 0.0;
};

// Name with a leading article and trailing legal suffixes removed
// ("The Acme Holdings Inc." -> "Acme"). Never returns an empty string.
std::string core_name(std::string_view name);

// Canonical name plus heuristic variants: article-stripped, every
// legal-suffix-stripped form, and the initialism of the core when it has
// at least two capitalized words ("The New York Times" -> "NYT").
std::set<std::string> expand_surface_forms(std::string_view canonical_name);

// URL-safe identifier for a normalized core name.
std::string make_entity_id(std::string_view normalized_core);

class EntityRepository {
 public:
  EntityRepository() = default;

  // Groups entries sharing a normalized core name into one record (union of
  // URIs and surface forms, max prominence, OR of has_description). The
  // result does not depend on input order.
  static EntityRepository merge_records(const std::vector<RawEntity>& raw);

  // Validates records and builds the surface index. Throws DataError.
  static EntityRepository from_records(std::vector<EntityRecord> records);

  // Most prominent record indexed under the normalized span, skipping
  // records without description when `require_description` is set.
  const EntityRecord* resolve_mention(std::string_view span_text,
                                      bool require_description = false) const;

  const EntityRecord* find(std::string_view entity_id) const;

  // Records with a surface form starting with the normalized prefix,
  // ranked by prominence then id.
  std::vector<const EntityRecord*> search_prefix(std::string_view prefix,
                                                 std::size_t limit = 20) const;

  // Largest number of whitespace-separated words in any indexed form.
  std::size_t max_form_words() const { return max_form_words_; }

  const std::map<std::string, EntityRecord, std::less<>>& records() const { return records_; }
  const std::map<std::string, std::vector<std::string>, std::less<>>& surface_index() const {
    return surface_index_;
  }

  void save(const std::filesystem::path& path) const;
  static EntityRepository load(const std::filesystem::path& path);

  friend bool operator==(const EntityRepository& a, const EntityRepository& b) {
    return a.records_ == b.records_ && a.surface_index_ == b.surface_index_;
  }

 private:
  void rebuild_index();

  std::map<std::string, EntityRecord, std::less<>> records_;
  std::map<std::string, std::vector<std::string>, std::less<>> surface_index_;
  std::size_t max_form_words_ = 0;
};

// Line-delimited {name, uris, has_description, prominence} records.
// Malformed lines are skipped with a diagnostic.
std::vector<RawEntity> read_raw_entities(const std::filesystem::path& path,
                                         Diagnostics* diagnostics = nullptr);

}  // namespace evkb::entities

#endif  // EVKB_ENTITIES_REPOSITORY_HPP_

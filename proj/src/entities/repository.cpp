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

#include "evkb/entities/repository.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>

#include "evkb/core/text.hpp"
#include "json.hpp"

namespace evkb::entities {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 19> kLegalSuffixes = {
    "inc",     "incorporated", "corp", "corporation", "co",   "company",  "ltd",
    "limited", "llc",          "llp",  "plc",         "ag",   "sa",       "nv",
    "gmbh",    "holdings",     "group", "technologies", "lp"};

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t b = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > b) words.emplace_back(text.substr(b, i - b));
  }
  return words;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string strip_punct_edges(std::string_view word) {
  std::size_t b = 0, e = word.size();
  while (b < e && (word[b] == ',' || word[b] == '.')) ++b;
  while (e > b && (word[e - 1] == ',' || word[e - 1] == '.')) --e;
  return std::string(word.substr(b, e - b));
}

bool is_legal_suffix(std::string_view word) {
  std::string w = ascii_lower(strip_punct_edges(word));
  return std::find(kLegalSuffixes.begin(), kLegalSuffixes.end(), w) != kLegalSuffixes.end();
}

std::vector<std::string> without_article(std::vector<std::string> words) {
  if (words.size() > 1 && ascii_lower(words.front()) == "the") words.erase(words.begin());
  return words;
}

// Drops one trailing legal suffix (and a dangling "&"/"and" or comma left
// behind). Returns false when nothing can be removed.
bool drop_suffix(std::vector<std::string>& words) {
  if (words.size() < 2 || !is_legal_suffix(words.back())) return false;
  words.pop_back();
  while (words.size() > 1 && (words.back() == "&" || ascii_lower(words.back()) == "and")) {
    words.pop_back();
  }
  std::string& last = words.back();
  while (!last.empty() && last.back() == ',') last.pop_back();
  return !last.empty();
}

std::vector<std::string> suffix_chain(std::vector<std::string> words) {
  std::vector<std::string> forms;
  while (drop_suffix(words)) forms.push_back(join_words(words));
  return forms;
}

}  // namespace

UriCoverage coverage_of(const std::set<std::string>& uris) {
  UriCoverage c;
  for (const auto& uri : uris) {
    std::string u = ascii_lower(uri);
    if (u.find("dbpedia") != std::string::npos) c.dbpedia = true;
    if (u.find("freebase") != std::string::npos) c.freebase = true;
    if (u.find("crunchbase") != std::string::npos) c.crunchbase = true;
  }
  return c;
}

std::string core_name(std::string_view name) {
  auto words = without_article(split_words(name));
  if (words.empty()) return std::string(trim(name));
  while (drop_suffix(words)) {
  }
  return join_words(words);
}

std::set<std::string> expand_surface_forms(std::string_view canonical_name) {
  std::set<std::string> forms;
  std::string name(trim(canonical_name));
  if (name.empty()) return forms;
  forms.insert(name);
  auto words = split_words(name);
  for (auto& f : suffix_chain(words)) forms.insert(f);
  auto bare = without_article(words);
  if (bare.size() != words.size()) {
    forms.insert(join_words(bare));
    for (auto& f : suffix_chain(bare)) forms.insert(f);
  }
  auto core = split_words(core_name(name));
  std::string initialism;
  for (const auto& w : core) {
    if (is_capitalized(w)) initialism.push_back(w[0]);
  }
  if (initialism.size() >= 2) forms.insert(initialism);
  return forms;
}

std::string make_entity_id(std::string_view normalized_core) {
  std::string id;
  for (char c : normalized_core) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      id.push_back(static_cast<char>(std::tolower(u)));
    } else if (c == ' ') {
      id.push_back('_');
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "-%02x", u);
      id += buf;
    }
  }
  return id;
}

EntityRepository EntityRepository::merge_records(const std::vector<RawEntity>& raw) {
  std::map<std::string, EntityRecord> merged;
  for (const auto& entry : raw) {
    std::string name(trim(entry.name));
    if (name.empty()) continue;
    std::string key = normalize_surface(core_name(name));
    if (key.empty()) key = normalize_surface(name);
    if (key.empty()) continue;
    auto [it, inserted] = merged.try_emplace(key);
    EntityRecord& rec = it->second;
    if (inserted) {
      rec.entity_id = make_entity_id(key);
      rec.canonical_name = name;
      rec.prominence = entry.prominence;
    } else {
      const auto& cur = rec.canonical_name;
      if (name.size() < cur.size() || (name.size() == cur.size() && name < cur)) {
        rec.canonical_name = name;
      }
      rec.prominence = std::max(rec.prominence, entry.prominence);
    }
    rec.has_description = rec.has_description || entry.has_description;
    rec.uris.insert(entry.uris.begin(), entry.uris.end());
    auto forms = expand_surface_forms(name);
    rec.surface_forms.insert(forms.begin(), forms.end());
  }
  std::vector<EntityRecord> records;
  for (auto& [key, rec] : merged) records.push_back(std::move(rec));
  return from_records(std::move(records));
}

EntityRepository EntityRepository::from_records(std::vector<EntityRecord> records) {
  EntityRepository repo;
  for (auto& rec : records) {
    if (rec.entity_id.empty()) throw DataError("entity with empty id");
    if (!rec.surface_forms.contains(rec.canonical_name)) {
      throw DataError("entity '" + rec.entity_id + "' canonical name is not a surface form");
    }
    if (rec.uris.empty()) throw DataError("entity '" + rec.entity_id + "' has no URIs");
    if (rec.prominence < 0) throw DataError("entity '" + rec.entity_id + "' has negative prominence");
    std::string id = rec.entity_id;
    if (!repo.records_.emplace(id, std::move(rec)).second) {
      throw DataError("duplicate entity id '" + id + "'");
    }
  }
  repo.rebuild_index();
  return repo;
}

void EntityRepository::rebuild_index() {
  surface_index_.clear();
  max_form_words_ = 0;
  for (const auto& [id, rec] : records_) {
    for (const auto& form : rec.surface_forms) {
      std::string key = normalize_surface(form);
      if (key.empty()) continue;
      surface_index_[key].push_back(id);
      max_form_words_ = std::max(max_form_words_, split_words(key).size());
    }
  }
  for (auto& [key, ids] : surface_index_) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::stable_sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
      return records_.at(a).prominence > records_.at(b).prominence;
    });
  }
}

const EntityRecord* EntityRepository::resolve_mention(std::string_view span_text,
                                                      bool require_description) const {
  auto it = surface_index_.find(normalize_surface(span_text));
  if (it == surface_index_.end()) return nullptr;
  for (const auto& id : it->second) {
    const EntityRecord& rec = records_.at(id);
    if (require_description && !rec.has_description) continue;
    return &rec;
  }
  return nullptr;
}

const EntityRecord* EntityRepository::find(std::string_view entity_id) const {
  auto it = records_.find(entity_id);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<const EntityRecord*> EntityRepository::search_prefix(std::string_view prefix,
                                                                 std::size_t limit) const {
  std::string key = normalize_surface(prefix);
  std::vector<const EntityRecord*> out;
  if (key.empty()) return out;
  std::set<std::string> seen;
  for (auto it = surface_index_.lower_bound(key);
       it != surface_index_.end() && it->first.compare(0, key.size(), key) == 0; ++it) {
    for (const auto& id : it->second) {
      if (seen.insert(id).second) out.push_back(&records_.at(id));
    }
  }
  std::sort(out.begin(), out.end(), [](const EntityRecord* a, const EntityRecord* b) {
    if (a->prominence != b->prominence) return a->prominence > b->prominence;
    return a->entity_id < b->entity_id;
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

void EntityRepository::save(const std::filesystem::path& path) const {
  json records = json::array();
  for (const auto& [id, rec] : records_) {
    records.push_back({{"id", rec.entity_id},
                       {"canonical_name", rec.canonical_name},
                       {"surface_forms", rec.surface_forms},
                       {"uris", rec.uris},
                       {"has_description", rec.has_description},
                       {"prominence", rec.prominence}});
  }
  json doc = {{"records", records}, {"surface_index", surface_index_}};
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

EntityRepository EntityRepository::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read entity repository " + path.string());
  EntityRepository repo;
  try {
    json doc = json::parse(in);
    for (const auto& r : doc.at("records")) {
      EntityRecord rec;
      rec.entity_id = r.at("id").get<std::string>();
      rec.canonical_name = r.at("canonical_name").get<std::string>();
      rec.surface_forms = r.at("surface_forms").get<std::set<std::string>>();
      rec.uris = r.at("uris").get<std::set<std::string>>();
      rec.has_description = r.at("has_description").get<bool>();
      rec.prominence = r.at("prominence").get<double>();
      std::string id = rec.entity_id;
      repo.records_.emplace(id, std::move(rec));
    }
    for (const auto& [key, ids] : doc.at("surface_index").items()) {
      auto list = ids.get<std::vector<std::string>>();
      for (const auto& id : list) {
        if (!repo.records_.contains(id)) {
          throw DataError("surface index references unknown entity '" + id + "'");
        }
      }
      repo.max_form_words_ = std::max(repo.max_form_words_, split_words(key).size());
      repo.surface_index_.emplace(key, std::move(list));
    }
  } catch (const json::exception& e) {
    throw DataError("malformed entity repository " + path.string() + ": " + e.what());
  }
  return repo;
}

std::vector<RawEntity> read_raw_entities(const std::filesystem::path& path,
                                         Diagnostics* diagnostics) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<RawEntity> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      json r = json::parse(line);
      RawEntity e;
      e.name = r.at("name").get<std::string>();
      e.uris = r.at("uris").get<std::vector<std::string>>();
      e.has_description = r.value("has_description", false);
      e.prominence = r.value("prominence", 0.0);
      if (trim(e.name).empty() || e.uris.empty() || e.prominence < 0) {
        throw DataError("entity needs a name, at least one URI and non-negative prominence");
      }
      out.push_back(std::move(e));
    } catch (const std::exception& e) {
      report(diagnostics, {path.string(), line_no, e.what()});
    }
  }
  return out;
}

}  // namespace evkb::entities

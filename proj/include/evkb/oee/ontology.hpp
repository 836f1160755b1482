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

#ifndef EVKB_OEE_ONTOLOGY_HPP_
#define EVKB_OEE_ONTOLOGY_HPP_

#include <array>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evkb/core/error.hpp"

namespace evkb::oee {

inline constexpr int kMaxDepth = 5;

enum class EventClass { increment, decrement };
enum class NodeOrigin { seed, hypernym, adjacent, manual };

std::string_view event_class_name(EventClass c);  // "IncrementEventType" ...
std::optional<EventClass> parse_event_class(std::string_view name);
std::string_view origin_name(NodeOrigin origin);
std::optional<NodeOrigin> parse_origin(std::string_view name);

struct PredicateNode {
  std::string label;
  EventClass event_class = EventClass::increment;
  int level = 1;                      // 1 = direct child of the event class
  std::optional<std::string> parent;  // absent iff level == 1
  NodeOrigin origin = NodeOrigin::seed;

  friend bool operator==(const PredicateNode&, const PredicateNode&) = default;
};

// Predicate hierarchy under IncrementEventType / DecrementEventType plus the
// noun->verb lexicon. Immutable once constructed.
class Ontology {
 public:
  Ontology() = default;

  // Validates the hierarchy (unique parent, level == parent level + 1,
  // depth <= kMaxDepth, class inherited from the parent, acyclic) and the
  // noun lexicon targets. Throws DataError on violation.
  static Ontology from_nodes(std::vector<PredicateNode> nodes,
                             std::map<std::string, std::string> noun_lexicon);

  bool contains(std::string_view label) const;
  const PredicateNode* find(std::string_view label) const;
  // Throws UnknownPredicateError.
  const PredicateNode& node(std::string_view label) const;

  // The ancestor on level 2, or the node itself when its level is <= 2.
  const std::string& second_level_ancestor(std::string_view label) const;
  bool predicates_equivalent(std::string_view a, std::string_view b) const;
  std::optional<std::string> noun_to_verb(std::string_view noun) const;

  // Root-first path ending at `label`.
  std::vector<std::string> chain(std::string_view label) const;
  std::vector<std::string> children(std::string_view label) const;
  // Distinct second-level classes, sorted.
  std::vector<std::string> predicate_classes() const;

  const std::map<std::string, PredicateNode, std::less<>>& nodes() const { return nodes_; }
  const std::map<std::string, std::string, std::less<>>& noun_lexicon() const { return nouns_; }
  std::size_t size() const { return nodes_.size(); }

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  std::map<std::string, PredicateNode, std::less<>> nodes_;
  std::map<std::string, std::string, std::less<>> nouns_;
};

struct SeedVerb {
  std::string lemma;
  EventClass event_class = EventClass::increment;
};

// Plain-text stand-in for WordNet: "hypernym <child> <parent>" and
// "adjacent <a> <b>" lines. Blank lines and '#' comments are ignored.
struct LexicalResource {
  std::vector<std::pair<std::string, std::string>> hypernyms;  // (child, parent), file order
  std::vector<std::pair<std::string, std::string>> adjacent;

  bool mentions(std::string_view term) const;
};

// Manual revision step: "reparent <label> <parent|->", "add <label> <parent>"
// or "add <label> - <Increment|Decrement>", "remove <label>".
struct OverlayDirective {
  enum class Kind { reparent, add, remove };
  Kind kind = Kind::reparent;
  std::string label;
  std::optional<std::string> parent;
  std::optional<EventClass> event_class;
};

// For each seed: the seed node, its hypernym chain as ancestors, and its
// adjacent terms as siblings; then the overlay is applied. Seeds missing
// from the resource are attached at level 1 with a diagnostic; a hypernym
// cycle or a chain deeper than kMaxDepth throws DataError.
Ontology build_ontology(const std::vector<SeedVerb>& seeds, const LexicalResource& resource,
                        const std::vector<OverlayDirective>& overlay,
                        const std::map<std::string, std::string>& noun_lexicon,
                        Diagnostics* diagnostics = nullptr);

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// (agent participates event), (event isClassified predicate),
// (event inflow|outflow resource).
std::array<Triple, 3> export_event_triples(const Ontology& ontology, std::string_view agent,
                                           std::string_view predicate, std::string_view resource,
                                           std::string_view event_id);

// File formats.
std::vector<SeedVerb> read_seeds(const std::filesystem::path& path);
LexicalResource read_lexical_resource(const std::filesystem::path& path);
LexicalResource parse_lexical_resource(std::istream& in, std::string_view source = "");
std::vector<OverlayDirective> read_overlay(const std::filesystem::path& path);
std::map<std::string, std::string> read_noun_lexicon(const std::filesystem::path& path);

// One JSON record per node, followed by one {"noun","verb"} record per
// noun lexicon entry.
void write_ontology(const Ontology& ontology, const std::filesystem::path& path);
Ontology read_ontology(const std::filesystem::path& path);

}  // namespace evkb::oee

#endif  // EVKB_OEE_ONTOLOGY_HPP_

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

#include "evkb/oee/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "evkb/core/text.hpp"
#include "json.hpp"

namespace evkb::oee {
namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

bool skip_line(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

// Recomputes levels top-down and the class of every node from its level-1
// ancestor. Throws on dangling parents, cycles and excess depth.
void relevel(std::map<std::string, PredicateNode, std::less<>>& nodes) {
  std::map<std::string, int, std::less<>> state;  // 0 unvisited, 1 visiting, 2 done
  std::function<void(PredicateNode&)> visit = [&](PredicateNode& node) {
    int& s = state[node.label];
    if (s == 2) return;
    if (s == 1) throw DataError("cycle in predicate hierarchy at '" + node.label + "'");
    s = 1;
    if (node.parent) {
      auto it = nodes.find(*node.parent);
      if (it == nodes.end()) {
        throw DataError("predicate '" + node.label + "' has unknown parent '" + *node.parent + "'");
      }
      visit(it->second);
      node.level = it->second.level + 1;
      node.event_class = it->second.event_class;
    } else {
      node.level = 1;
    }
    if (node.level > kMaxDepth) {
      throw DataError("predicate hierarchy deeper than " + std::to_string(kMaxDepth) +
                      " levels at '" + node.label + "'");
    }
    state[node.label] = 2;
  };
  for (auto& [label, node] : nodes) visit(node);
}

}  // namespace

std::string_view event_class_name(EventClass c) {
  return c == EventClass::increment ? "IncrementEventType" : "DecrementEventType";
}

std::optional<EventClass> parse_event_class(std::string_view name) {
  std::string lower = ascii_lower(name);
  if (lower == "increment" || lower == "incrementeventtype") return EventClass::increment;
  if (lower == "decrement" || lower == "decrementeventtype") return EventClass::decrement;
  return std::nullopt;
}

std::string_view origin_name(NodeOrigin origin) {
  switch (origin) {
    case NodeOrigin::seed:
      return "seed";
    case NodeOrigin::hypernym:
      return "hypernym";
    case NodeOrigin::adjacent:
      return "adjacent";
    case NodeOrigin::manual:
      return "manual";
  }
  return "seed";
}

std::optional<NodeOrigin> parse_origin(std::string_view name) {
  for (NodeOrigin o : {NodeOrigin::seed, NodeOrigin::hypernym, NodeOrigin::adjacent,
                       NodeOrigin::manual}) {
    if (origin_name(o) == name) return o;
  }
  return std::nullopt;
}

Ontology Ontology::from_nodes(std::vector<PredicateNode> nodes,
                              std::map<std::string, std::string> noun_lexicon) {
  Ontology onto;
  for (auto& node : nodes) {
    if (node.label.empty()) throw DataError("empty predicate label");
    if (node.level < 1) throw DataError("predicate '" + node.label + "' has level < 1");
    if ((node.level == 1) != !node.parent.has_value()) {
      throw DataError("predicate '" + node.label + "' must have a parent iff level > 1");
    }
    std::string label = node.label;
    if (!onto.nodes_.emplace(label, std::move(node)).second) {
      throw DataError("duplicate predicate label '" + label + "'");
    }
  }
  for (const auto& [label, node] : onto.nodes_) {
    if (!node.parent) continue;
    auto it = onto.nodes_.find(*node.parent);
    if (it == onto.nodes_.end()) {
      throw DataError("predicate '" + label + "' has unknown parent '" + *node.parent + "'");
    }
    if (node.level != it->second.level + 1) {
      throw DataError("predicate '" + label + "' level is not parent level + 1");
    }
    if (node.event_class != it->second.event_class) {
      throw DataError("predicate '" + label + "' event class differs from its parent");
    }
    if (node.level > kMaxDepth) {
      throw DataError("predicate '" + label + "' exceeds maximum depth");
    }
  }
  // Level consistency along parents already rules out cycles.
  for (auto& [noun, verb] : noun_lexicon) {
    if (!onto.nodes_.contains(verb)) {
      throw DataError("noun '" + noun + "' maps to unknown predicate '" + verb + "'");
    }
    onto.nouns_.emplace(noun, verb);
  }
  return onto;
}

bool Ontology::contains(std::string_view label) const { return nodes_.find(label) != nodes_.end(); }

const PredicateNode* Ontology::find(std::string_view label) const {
  auto it = nodes_.find(label);
  return it == nodes_.end() ? nullptr : &it->second;
}

const PredicateNode& Ontology::node(std::string_view label) const {
  const PredicateNode* n = find(label);
  if (n == nullptr) throw UnknownPredicateError(std::string(label));
  return *n;
}

const std::string& Ontology::second_level_ancestor(std::string_view label) const {
  const PredicateNode* n = &node(label);
  while (n->level > 2) n = &node(*n->parent);
  return n->label;
}

bool Ontology::predicates_equivalent(std::string_view a, std::string_view b) const {
  return second_level_ancestor(a) == second_level_ancestor(b);
}

std::optional<std::string> Ontology::noun_to_verb(std::string_view noun) const {
  auto it = nouns_.find(ascii_lower(noun));
  if (it == nouns_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Ontology::chain(std::string_view label) const {
  std::vector<std::string> out;
  const PredicateNode* n = &node(label);
  out.push_back(n->label);
  while (n->parent) {
    n = &node(*n->parent);
    out.push_back(n->label);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> Ontology::children(std::string_view label) const {
  std::vector<std::string> out;
  for (const auto& [l, n] : nodes_) {
    if (n.parent && *n.parent == label) out.push_back(l);
  }
  return out;
}

std::vector<std::string> Ontology::predicate_classes() const {
  std::set<std::string> classes;
  for (const auto& [label, n] : nodes_) classes.insert(second_level_ancestor(label));
  return {classes.begin(), classes.end()};
}

bool LexicalResource::mentions(std::string_view term) const {
  auto has = [&](const auto& edges) {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const auto& e) { return e.first == term || e.second == term; });
  };
  return has(hypernyms) || has(adjacent);
}

Ontology build_ontology(const std::vector<SeedVerb>& seeds, const LexicalResource& resource,
                        const std::vector<OverlayDirective>& overlay,
                        const std::map<std::string, std::string>& noun_lexicon,
                        Diagnostics* diagnostics) {
  // Reject any cycle in the hypernym graph, not only along first parents.
  {
    std::map<std::string, std::vector<std::string>> graph;
    for (const auto& [child, parent] : resource.hypernyms) graph[child].push_back(parent);
    std::map<std::string, int> state;
    std::function<void(const std::string&)> dfs = [&](const std::string& term) {
      int& s = state[term];
      if (s == 2) return;
      if (s == 1) throw DataError("cycle in lexical resource at '" + term + "'");
      s = 1;
      if (auto it = graph.find(term); it != graph.end()) {
        for (const auto& p : it->second) dfs(p);
      }
      state[term] = 2;
    };
    for (const auto& [child, parents] : graph) dfs(child);
  }

  std::map<std::string, std::string> first_parent;
  for (const auto& [child, parent] : resource.hypernyms) first_parent.emplace(child, parent);

  std::map<std::string, PredicateNode, std::less<>> nodes;
  auto ensure = [&](const std::string& label, std::optional<std::string> parent, EventClass cls,
                    NodeOrigin origin) {
    auto [it, inserted] = nodes.try_emplace(label);
    PredicateNode& node = it->second;
    if (inserted) {
      node.label = label;
      node.parent = std::move(parent);
      node.event_class = cls;
      node.origin = origin;
      return;
    }
    if (node.parent != parent) {
      report(diagnostics, {"", 0,
                           "predicate '" + label + "' keeps its first parent '" +
                               node.parent.value_or("-") + "'"});
    }
    if (origin == NodeOrigin::seed) node.origin = NodeOrigin::seed;
  };

  for (const auto& seed : seeds) {
    if (!resource.mentions(seed.lemma)) {
      report(diagnostics,
             {"", 0, "seed '" + seed.lemma + "' not in lexical resource; attached at level 1"});
      ensure(seed.lemma, std::nullopt, seed.event_class, NodeOrigin::seed);
      continue;
    }
    std::vector<std::string> path{seed.lemma};
    for (auto it = first_parent.find(seed.lemma); it != first_parent.end();
         it = first_parent.find(it->second)) {
      path.push_back(it->second);
    }
    std::reverse(path.begin(), path.end());
    if (static_cast<int>(path.size()) > kMaxDepth) {
      throw DataError("hypernym chain of '" + seed.lemma + "' exceeds " +
                      std::to_string(kMaxDepth) + " levels");
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      std::optional<std::string> parent;
      if (k > 0) parent = path[k - 1];
      ensure(path[k], parent, seed.event_class,
             k + 1 == path.size() ? NodeOrigin::seed : NodeOrigin::hypernym);
    }
    const std::optional<std::string> sibling_parent = nodes.at(seed.lemma).parent;
    for (const auto& [a, b] : resource.adjacent) {
      if (a != seed.lemma && b != seed.lemma) continue;
      const std::string& term = a == seed.lemma ? b : a;
      if (!nodes.contains(term)) {
        ensure(term, sibling_parent, nodes.at(seed.lemma).event_class, NodeOrigin::adjacent);
      }
    }
  }

  for (const auto& d : overlay) {
    switch (d.kind) {
      case OverlayDirective::Kind::reparent: {
        auto it = nodes.find(d.label);
        if (it == nodes.end()) throw DataError("overlay: unknown predicate '" + d.label + "'");
        if (d.parent && !nodes.contains(*d.parent)) {
          throw DataError("overlay: unknown parent '" + *d.parent + "'");
        }
        it->second.parent = d.parent;
        if (!d.parent && d.event_class) it->second.event_class = *d.event_class;
        break;
      }
      case OverlayDirective::Kind::add: {
        if (nodes.contains(d.label)) throw DataError("overlay: '" + d.label + "' already exists");
        EventClass cls = d.event_class.value_or(EventClass::increment);
        if (d.parent) {
          auto p = nodes.find(*d.parent);
          if (p == nodes.end()) throw DataError("overlay: unknown parent '" + *d.parent + "'");
          cls = p->second.event_class;
        } else if (!d.event_class) {
          throw DataError("overlay: level-1 addition of '" + d.label + "' needs an event class");
        }
        ensure(d.label, d.parent, cls, NodeOrigin::manual);
        break;
      }
      case OverlayDirective::Kind::remove: {
        if (!nodes.contains(d.label)) throw DataError("overlay: unknown predicate '" + d.label + "'");
        for (const auto& [l, n] : nodes) {
          if (n.parent && *n.parent == d.label) {
            throw DataError("overlay: cannot remove '" + d.label + "' with children");
          }
        }
        nodes.erase(d.label);
        break;
      }
    }
    relevel(nodes);
  }
  relevel(nodes);

  std::map<std::string, std::string> nouns;
  for (const auto& [noun, verb] : noun_lexicon) {
    if (!nodes.contains(verb)) {
      report(diagnostics, {"", 0, "noun '" + noun + "' maps to unknown predicate '" + verb +
                                      "'; dropped"});
      continue;
    }
    nouns.emplace(ascii_lower(noun), verb);
  }

  std::vector<PredicateNode> flat;
  for (auto& [label, node] : nodes) flat.push_back(node);
  return Ontology::from_nodes(std::move(flat), std::move(nouns));
}

std::array<Triple, 3> export_event_triples(const Ontology& ontology, std::string_view agent,
                                           std::string_view predicate, std::string_view resource,
                                           std::string_view event_id) {
  const PredicateNode& node = ontology.node(predicate);
  const char* flow = node.event_class == EventClass::increment ? "inflow" : "outflow";
  return {Triple{std::string(agent), "participates", std::string(event_id)},
          Triple{std::string(event_id), "isClassified", node.label},
          Triple{std::string(event_id), flow, std::string(resource)}};
}

std::vector<SeedVerb> read_seeds(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::vector<SeedVerb> seeds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto fields = split_ws(line);
    std::optional<EventClass> cls;
    if (fields.size() == 2) cls = parse_event_class(fields[1]);
    if (!cls) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected '<lemma> <Increment|Decrement>'");
    }
    seeds.push_back({ascii_lower(fields[0]), *cls});
  }
  return seeds;
}

LexicalResource parse_lexical_resource(std::istream& in, std::string_view source) {
  LexicalResource res;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto fields = split_ws(line);
    if (fields.size() == 3 && fields[0] == "hypernym") {
      res.hypernyms.emplace_back(ascii_lower(fields[1]), ascii_lower(fields[2]));
    } else if (fields.size() == 3 && fields[0] == "adjacent") {
      res.adjacent.emplace_back(ascii_lower(fields[1]), ascii_lower(fields[2]));
    } else {
      throw DataError(std::string(source) + ":" + std::to_string(line_no) +
                      ": expected 'hypernym <child> <parent>' or 'adjacent <a> <b>'");
    }
  }
  return res;
}

LexicalResource read_lexical_resource(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_lexical_resource(in, path.string());
}

std::vector<OverlayDirective> read_overlay(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::vector<OverlayDirective> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto f = split_ws(line);
    auto fail = [&] {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": bad overlay directive");
    };
    OverlayDirective d;
    if (f.size() < 2) fail();
    d.label = ascii_lower(f[1]);
    if (f[0] == "remove" && f.size() == 2) {
      d.kind = OverlayDirective::Kind::remove;
    } else if ((f[0] == "reparent" || f[0] == "add") && (f.size() == 3 || f.size() == 4)) {
      d.kind = f[0] == "add" ? OverlayDirective::Kind::add : OverlayDirective::Kind::reparent;
      if (f[2] != "-") d.parent = ascii_lower(f[2]);
      if (f.size() == 4) {
        d.event_class = parse_event_class(f[3]);
        if (!d.event_class) fail();
      }
    } else {
      fail();
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::map<std::string, std::string> read_noun_lexicon(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected noun<TAB>verb");
    }
    out[ascii_lower(trim(std::string_view(line).substr(0, tab)))] =
        ascii_lower(trim(std::string_view(line).substr(tab + 1)));
  }
  return out;
}

void write_ontology(const Ontology& ontology, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& [label, n] : ontology.nodes()) {
    json rec = {{"label", n.label},
                {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                {"event_class", event_class_name(n.event_class)},
                {"level", n.level},
                {"origin", origin_name(n.origin)}};
    out << rec.dump() << '\n';
  }
  for (const auto& [noun, verb] : ontology.noun_lexicon()) {
    out << json{{"noun", noun}, {"verb", verb}}.dump() << '\n';
  }
}

Ontology read_ontology(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::vector<PredicateNode> nodes;
  std::map<std::string, std::string> nouns;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto where = path.string() + ":" + std::to_string(line_no) + ": ";
    try {
      json rec = json::parse(line);
      if (rec.contains("noun")) {
        nouns[rec.at("noun").get<std::string>()] = rec.at("verb").get<std::string>();
        continue;
      }
      PredicateNode n;
      n.label = rec.at("label").get<std::string>();
      if (!rec.at("parent").is_null()) n.parent = rec.at("parent").get<std::string>();
      auto cls = parse_event_class(rec.at("event_class").get<std::string>());
      auto origin = parse_origin(rec.at("origin").get<std::string>());
      if (!cls || !origin) throw DataError(where + "bad event_class or origin");
      n.event_class = *cls;
      n.origin = *origin;
      n.level = rec.at("level").get<int>();
      nodes.push_back(std::move(n));
    } catch (const json::exception& e) {
      throw DataError(where + e.what());
    }
  }
  return Ontology::from_nodes(std::move(nodes), std::move(nouns));
}

}  // namespace evkb::oee

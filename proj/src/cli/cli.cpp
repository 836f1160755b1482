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

#include "evkb/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "evkb/annotate/annotator.hpp"
#include "evkb/corpus/corpus.hpp"
#include "evkb/entities/repository.hpp"
#include "evkb/evaluation/evaluation.hpp"
#include "evkb/evaluation/loocv.hpp"
#include "evkb/events/events.hpp"
#include "evkb/io/records.hpp"
#include "evkb/kb/service.hpp"
#include "evkb/learning/labeling.hpp"
#include "evkb/oee/ontology.hpp"
#include "evkb/selection/features.hpp"
#include "evkb/selection/selection.hpp"

namespace evkb::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

json config_json(const PipelineConfig& c) {
  json j = {{"noun_predicates", c.noun_predicates},
            {"enforce_roles", c.enforce_roles},
            {"require_description", c.require_description},
            {"gamma", c.gamma},
            {"seed", c.forest.seed},
            {"n_trees", c.forest.n_trees},
            {"max_depth", c.forest.max_depth},
            {"min_leaf", c.forest.min_leaf},
            {"features_per_split", c.forest.features_per_split}};
  return j;
}

void write_manifest(const fs::path& output, std::string_view stage, const json& inputs,
                    const PipelineConfig& config, const json& counts) {
  fs::path path = output;
  path += ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write manifest " + path.string());
  const json manifest = {{"stage", stage},
                         {"output", output.string()},
                         {"inputs", inputs},
                         {"config", config_json(config)},
                         {"counts", counts}};
  out << manifest.dump(2) << '\n';
}

void print_diagnostics(const Diagnostics& diagnostics, std::ostream& err) {
  for (const auto& d : diagnostics) err << "warning: " << d.to_string() << '\n';
}

const fs::path& require_path(const std::optional<fs::path>& path, std::string_view what) {
  if (!path || path->empty()) throw UsageError(std::string("missing ") + std::string(what));
  return *path;
}

void require_file(const fs::path& path) {
  if (!fs::exists(path)) throw DataError("missing input: " + path.string());
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

json report_json(const evaluation::EvalReport& r) {
  return {{"mode", evaluation::mode_name(r.mode)},
          {"tp", r.tp},
          {"fp", r.fp},
          {"fn", r.fn},
          {"precision", r.precision()},
          {"recall", r.recall()},
          {"f1", r.f1()}};
}

void print_report_row(std::ostream& out, std::string_view label, const evaluation::EvalReport& r) {
  out << std::left << std::setw(12) << label << std::setw(9) << evaluation::mode_name(r.mode)
      << " P=" << fixed(r.precision()) << " R=" << fixed(r.recall()) << " F1=" << fixed(r.f1())
      << "  (tp=" << r.tp << " fp=" << r.fp << " fn=" << r.fn << ")\n";
}

std::vector<events::CandidateQuintuple> extract_candidates(
    const std::vector<annotate::AnnotatedSentence>& annotated, const oee::Ontology* ontology,
    std::size_t* n_events) {
  const auto groups =
      ontology ? events::group_sentences(annotated, *ontology) : events::group_sentences(annotated);
  std::vector<events::CandidateQuintuple> out;
  for (const auto& g : groups) {
    auto candidates = events::generate_candidates(g);
    std::move(candidates.begin(), candidates.end(), std::back_inserter(out));
  }
  if (n_events) *n_events = groups.size();
  return out;
}

std::vector<annotate::AnnotatedSentence> annotate_corpus(const PipelineConfig& config,
                                                         const oee::Ontology& ontology,
                                                         const entities::EntityRepository& repo,
                                                         std::size_t* n_documents,
                                                         std::ostream& err) {
  Diagnostics diagnostics;
  const fs::path& corpus_path = require_path(config.corpus, "--corpus");
  require_file(corpus_path);
  const auto documents = corpus::load_corpus(corpus_path, &diagnostics);
  annotate::Annotator annotator(ontology, repo,
                                {config.noun_predicates, config.enforce_roles,
                                 config.require_description});
  auto annotated = annotator.annotate_corpus(documents, &diagnostics);
  print_diagnostics(diagnostics, err);
  if (n_documents) *n_documents = documents.size();
  return annotated;
}

oee::Ontology load_ontology(const std::optional<fs::path>& path) {
  const fs::path& p = require_path(path, "--ontology");
  require_file(p);
  return oee::read_ontology(p);
}

entities::EntityRepository load_entities(const std::optional<fs::path>& path) {
  const fs::path& p = require_path(path, "--entities");
  require_file(p);
  return entities::EntityRepository::load(p);
}

std::vector<evaluation::GroundTruthEvent> load_truth(const fs::path& path, std::ostream& err) {
  require_file(path);
  Diagnostics diagnostics;
  auto truths = evaluation::read_ground_truth(path, &diagnostics);
  print_diagnostics(diagnostics, err);
  return truths;
}

std::vector<events::CandidateQuintuple> load_candidates(const fs::path& path, std::ostream& err) {
  require_file(path);
  Diagnostics diagnostics;
  auto candidates = io::read_candidates(path, &diagnostics);
  print_diagnostics(diagnostics, err);
  return candidates;
}

void print_loocv(std::ostream& out, const evaluation::LoocvResult& result) {
  using selection::Method;
  out << "folds: " << result.folds.size() << '\n';
  for (const auto& fold : result.folds) {
    out << "  " << std::left << std::setw(16) << fold.company << " train=" << fold.train_instances
        << " positives=" << fold.train_positives << " test_events=" << fold.test_events
        << " truths=" << fold.test_truths << '\n';
  }
  for (auto mode : {evaluation::MatchMode::events_only, evaluation::MatchMode::strict,
                    evaluation::MatchMode::relaxed}) {
    for (Method m : {Method::earliest, Method::latest, Method::frequent, Method::supervised}) {
      print_report_row(out, selection::method_name(m), result.aggregate.at(m).at(mode));
    }
  }
}

json loocv_json(const evaluation::LoocvResult& result) {
  auto reports = [](const evaluation::MethodReports& r) {
    json j = json::object();
    for (const auto& [method, modes] : r) {
      for (const auto& [mode, report] : modes) {
        j[std::string(selection::method_name(method))][std::string(evaluation::mode_name(mode))] =
            report_json(report);
      }
    }
    return j;
  };
  json folds = json::array();
  for (const auto& f : result.folds) {
    folds.push_back({{"company", f.company},
                     {"train_instances", f.train_instances},
                     {"train_positives", f.train_positives},
                     {"test_events", f.test_events},
                     {"test_truths", f.test_truths},
                     {"reports", reports(f.reports)}});
  }
  return {{"folds", folds}, {"aggregate", reports(result.aggregate)}};
}

struct Options {
  PipelineConfig config;
  std::optional<fs::path> config_file;
  fs::path output;
  fs::path seeds, lexres, overlay, nouns;
  fs::path source, repo;
  std::string text;
  fs::path annotated, candidates, selections, truth, data;
  std::string method = "earliest";
  std::string mode = "relaxed";
  std::string subject, predicate, object, event_id = "E1";
  std::string host = "127.0.0.1";
  int port = 8080;
};

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  void ontology_build() {
    Diagnostics diagnostics;
    require_file(o_.seeds);
    require_file(o_.lexres);
    const auto seeds = oee::read_seeds(o_.seeds);
    const auto resource = oee::read_lexical_resource(o_.lexres);
    std::vector<oee::OverlayDirective> overlay;
    if (!o_.overlay.empty()) {
      require_file(o_.overlay);
      overlay = oee::read_overlay(o_.overlay);
    }
    std::map<std::string, std::string> nouns;
    if (!o_.nouns.empty()) {
      require_file(o_.nouns);
      nouns = oee::read_noun_lexicon(o_.nouns);
    }
    const auto ontology = oee::build_ontology(seeds, resource, overlay, nouns, &diagnostics);
    print_diagnostics(diagnostics, err_);
    oee::write_ontology(ontology, o_.output);
    write_manifest(o_.output, "ontology build",
                   {{"seeds", o_.seeds.string()},
                    {"lexres", o_.lexres.string()},
                    {"overlay", o_.overlay.string()},
                    {"nouns", o_.nouns.string()}},
                   o_.config, {{"nodes", ontology.size()}, {"nouns", ontology.noun_lexicon().size()}});
    out_ << "ontology: " << ontology.size() << " predicates, " << ontology.noun_lexicon().size()
         << " nouns -> " << o_.output.string() << '\n';
  }

  void ontology_export_triples() {
    const auto ontology = load_ontology(o_.config.ontology);
    std::vector<std::array<oee::Triple, 3>> triples;
    if (!o_.selections.empty()) {
      require_file(o_.selections);
      Diagnostics diagnostics;
      const auto selections = io::read_selections(o_.selections, &diagnostics);
      print_diagnostics(diagnostics, err_);
      std::size_t n = 0;
      for (const auto& s : selections) {
        if (!s.chosen) continue;
        triples.push_back(oee::export_event_triples(ontology, s.chosen->key.subject_id,
                                                    s.chosen->predicate_label,
                                                    s.chosen->key.object_id,
                                                    "E" + std::to_string(++n)));
      }
    } else {
      if (o_.subject.empty() || o_.predicate.empty() || o_.object.empty()) {
        throw UsageError("export-triples needs --selections or --subject/--predicate/--object");
      }
      triples.push_back(
          oee::export_event_triples(ontology, o_.subject, o_.predicate, o_.object, o_.event_id));
    }
    std::ostringstream text;
    for (const auto& group : triples) {
      for (const auto& t : group) text << t.subject << '\t' << t.relation << '\t' << t.object << '\n';
    }
    if (o_.output.empty()) {
      out_ << text.str();
    } else {
      std::ofstream file(o_.output, std::ios::binary);
      if (!file) throw DataError("cannot write " + o_.output.string());
      file << text.str();
    }
  }

  void entities_build() {
    require_file(o_.source);
    Diagnostics diagnostics;
    const auto raw = entities::read_raw_entities(o_.source, &diagnostics);
    print_diagnostics(diagnostics, err_);
    const auto repo = entities::EntityRepository::merge_records(raw);
    repo.save(o_.output);
    write_manifest(o_.output, "entities build", {{"source", o_.source.string()}}, o_.config,
                   {{"raw_entries", raw.size()},
                    {"records", repo.records().size()},
                    {"surface_forms", repo.surface_index().size()}});
    out_ << "entities: " << repo.records().size() << " records from " << raw.size()
         << " entries -> " << o_.output.string() << '\n';
  }

  void entities_lookup() {
    require_file(o_.repo);
    const auto repo = entities::EntityRepository::load(o_.repo);
    const auto* record = repo.resolve_mention(o_.text, o_.config.require_description);
    if (record == nullptr) {
      out_ << "no match\n";
      return;
    }
    out_ << record->entity_id << '\t' << record->canonical_name << '\n';
  }

  void annotate() {
    const auto ontology = load_ontology(o_.config.ontology);
    const auto repo = load_entities(o_.config.entities);
    std::size_t documents = 0;
    const auto annotated = annotate_corpus(o_.config, ontology, repo, &documents, err_);
    std::vector<json> lines;
    for (const auto& a : annotated) lines.push_back(io::to_json(a));
    io::write_lines(o_.output, lines);
    write_manifest(o_.output, "annotate",
                   {{"corpus", o_.config.corpus->string()},
                    {"ontology", o_.config.ontology->string()},
                    {"entities", o_.config.entities->string()}},
                   o_.config, {{"documents", documents}, {"annotated_sentences", annotated.size()}});
    out_ << "annotated " << annotated.size() << " sentences from " << documents
         << " documents -> " << o_.output.string() << '\n';
  }

  void extract() {
    require_file(o_.annotated);
    Diagnostics diagnostics;
    const auto annotated = io::read_annotated(o_.annotated, &diagnostics);
    print_diagnostics(diagnostics, err_);
    std::optional<oee::Ontology> ontology;
    if (o_.config.ontology) ontology = load_ontology(o_.config.ontology);
    std::size_t n_events = 0;
    const auto candidates =
        extract_candidates(annotated, ontology ? &*ontology : nullptr, &n_events);
    std::vector<json> lines;
    for (const auto& c : candidates) lines.push_back(io::to_json(c));
    io::write_lines(o_.output, lines);
    write_manifest(o_.output, "extract", {{"annotated", o_.annotated.string()}}, o_.config,
                   {{"events", n_events}, {"quintuples", candidates.size()}});
    out_ << n_events << " events, " << candidates.size() << " quintuples -> "
         << o_.output.string() << '\n';
  }

  void select() {
    auto method = selection::parse_method(o_.method);
    if (!method) throw UsageError("unknown method: " + o_.method);
    if (o_.config.gamma < 0.0 || o_.config.gamma > 1.0) throw UsageError("gamma must lie in [0,1]");
    std::optional<learning::ForestModel> model;
    if (*method == selection::Method::supervised) {
      const fs::path& p = require_path(o_.config.model, "--model for supervised selection");
      require_file(p);
      model = learning::ForestModel::load(p);
    }
    const auto candidates = load_candidates(o_.candidates, err_);
    std::vector<json> lines;
    std::size_t chosen = 0;
    const auto events = events::split_by_event(candidates);
    for (const auto& e : events) {
      const auto result = selection::select(e, *method, model ? &*model : nullptr, o_.config.gamma);
      if (result.chosen) ++chosen;
      lines.push_back(io::to_json(result));
    }
    io::write_lines(o_.output, lines);
    write_manifest(o_.output, "select",
                   {{"candidates", o_.candidates.string()},
                    {"model", o_.config.model ? o_.config.model->string() : ""},
                    {"method", o_.method}},
                   o_.config,
                   {{"events", events.size()}, {"quintuples", candidates.size()}, {"selected", chosen}});
    out_ << o_.method << ": " << chosen << " of " << events.size() << " events selected -> "
         << o_.output.string() << '\n';
  }

  void train() {
    const auto ontology = load_ontology(o_.config.ontology);
    const auto candidates = load_candidates(o_.candidates, err_);
    const auto truths = load_truth(o_.truth, err_);
    const auto instances =
        learning::label_instances(events::split_by_event(candidates), truths, ontology);
    std::size_t positives = 0;
    for (const auto& i : instances) positives += i.label > 0.5 ? 1 : 0;
    if (positives == 0 || positives == instances.size()) {
      err_ << "warning: training data has a single label (" << positives << " positives of "
           << instances.size() << ")\n";
    }
    const auto model = learning::train_on_instances(instances, o_.config.forest);
    model.save(o_.output);
    write_manifest(o_.output, "train",
                   {{"candidates", o_.candidates.string()}, {"truth", o_.truth.string()}},
                   o_.config, {{"instances", instances.size()}, {"positives", positives}});
    out_ << "trained " << model.trees().size() << " trees on " << instances.size()
         << " instances (" << positives << " positive) -> " << o_.output.string() << '\n';
  }

  void importance() {
    const fs::path& p = require_path(o_.config.model, "--model");
    require_file(p);
    const auto model = learning::ForestModel::load(p);
    const auto values = learning::gini_importance(model);
    std::map<std::string, double> merged;
    for (std::size_t i = 0; i < values.size(); ++i) {
      merged[std::string(selection::feature_of_column(model.feature_names()[i]))] += values[i];
    }
    std::vector<std::pair<std::string, double>> rows(merged.begin(), merged.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (const auto& [name, value] : rows) {
      out_ << std::left << std::setw(22) << name << fixed(value) << '\n';
    }
  }

  void evaluate() {
    auto mode = evaluation::parse_mode(o_.mode);
    if (!mode) throw UsageError("unknown mode: " + o_.mode);
    const auto ontology = load_ontology(o_.config.ontology);
    require_file(o_.selections);
    Diagnostics diagnostics;
    const auto selections = io::read_selections(o_.selections, &diagnostics);
    print_diagnostics(diagnostics, err_);
    const auto truths = load_truth(o_.truth, err_);
    std::vector<events::CandidateQuintuple> chosen;
    std::string method = "mixed";
    for (const auto& s : selections) {
      if (s.chosen) chosen.push_back(*s.chosen);
    }
    if (!selections.empty()) method = std::string(selection::method_name(selections.front().method));
    const auto report = evaluation::evaluate(chosen, truths, *mode, ontology);
    print_report_row(out_, method, report);
    out_ << report_json(report).dump() << '\n';
  }

  void loocv() {
    require_file(o_.truth);
    const auto ontology = load_ontology(o_.config.ontology);
    const auto repo = load_entities(o_.config.entities);
    const auto annotated = annotate_corpus(o_.config, ontology, repo, nullptr, err_);
    const auto candidates = extract_candidates(annotated, &ontology, nullptr);
    const auto truths = load_truth(o_.truth, err_);
    const auto result = evaluation::loo_cv(events::split_by_event(candidates), truths, ontology,
                                           {o_.config.forest, o_.config.gamma});
    print_loocv(out_, result);
    if (!o_.output.empty()) {
      std::ofstream file(o_.output, std::ios::binary);
      if (!file) throw DataError("cannot write " + o_.output.string());
      file << loocv_json(result).dump(2) << '\n';
    }
  }

  void serve() {
    Diagnostics diagnostics;
    auto data = kb::load_service_data(o_.data, o_.config.gamma, &diagnostics);
    print_diagnostics(diagnostics, err_);
    kb::ApiService service(*data.store, data.repository, data.ontology, data.corpus_path);
    httplib::Server server;
    service.mount(server);
    out_ << "serving " << data.store->records().size() << " records on http://" << o_.host << ':'
         << o_.port << '\n';
    out_.flush();
    if (!server.listen(o_.host, o_.port)) {
      throw UsageError("cannot listen on " + o_.host + ":" + std::to_string(o_.port));
    }
  }

  void stats() {
    if (!o_.annotated.empty()) {
      require_file(o_.annotated);
      const auto annotated = io::read_annotated(o_.annotated);
      std::size_t n_events = 0;
      const auto candidates = extract_candidates(annotated, nullptr, &n_events);
      std::set<std::string> docs;
      for (const auto& a : annotated) docs.insert(a.doc_id);
      out_ << "documents " << docs.size() << "\nannotated_sentences " << annotated.size()
           << "\nevents " << n_events << "\nquintuples " << candidates.size() << '\n';
      return;
    }
    if (!o_.candidates.empty()) {
      const auto candidates = load_candidates(o_.candidates, err_);
      out_ << "events " << events::split_by_event(candidates).size() << "\nquintuples "
           << candidates.size() << '\n';
      return;
    }
    throw UsageError("stats needs --annotated or --candidates");
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_config_option(CLI::App* app, Options& o) {
  app->add_option("--config", o.config_file, "JSON config file overriding flags");
}

}  // namespace

void apply_config_file(const fs::path& path, PipelineConfig& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  const fs::path base = path.parent_path();
  auto as_path = [&](const json& v) {
    fs::path p = v.get<std::string>();
    return p.is_relative() ? base / p : p;
  };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "noun_predicates") {
        config.noun_predicates = value.get<bool>();
      } else if (key == "enforce_roles") {
        config.enforce_roles = value.get<bool>();
      } else if (key == "require_description") {
        config.require_description = value.get<bool>();
      } else if (key == "gamma") {
        config.gamma = value.get<double>();
      } else if (key == "seed") {
        config.forest.seed = value.get<std::uint64_t>();
      } else if (key == "n_trees") {
        config.forest.n_trees = value.get<int>();
      } else if (key == "max_depth") {
        config.forest.max_depth = value.get<int>();
      } else if (key == "min_leaf") {
        config.forest.min_leaf = value.get<int>();
      } else if (key == "features_per_split") {
        config.forest.features_per_split = value.get<int>();
      } else if (key == "bootstrap") {
        config.forest.bootstrap = value.get<bool>();
      } else if (key == "corpus") {
        config.corpus = as_path(value);
      } else if (key == "ontology") {
        config.ontology = as_path(value);
      } else if (key == "entities") {
        config.entities = as_path(value);
      } else if (key == "model") {
        config.model = as_path(value);
      } else {
        throw UsageError("unknown config key: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw UsageError("bad config value: " + std::string(e.what()));
  }
  if (config.gamma < 0.0 || config.gamma > 1.0) throw UsageError("gamma must lie in [0,1]");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  PipelineConfig& c = o.config;
  CLI::App app{"Economic event extraction and knowledge base curation"};
  app.name("evkb");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* ontology = app.add_subcommand("ontology", "Build or export the predicate ontology");
  ontology->require_subcommand(1);
  auto* ont_build = ontology->add_subcommand("build", "Build the ontology from seed verbs");
  ont_build->add_option("--seeds", o.seeds)->required();
  ont_build->add_option("--lexres", o.lexres)->required();
  ont_build->add_option("--overlay", o.overlay);
  ont_build->add_option("--nouns", o.nouns);
  ont_build->add_option("-o,--output", o.output)->required();
  auto* ont_export = ontology->add_subcommand("export-triples", "Export events as triples");
  ont_export->add_option("--ontology", c.ontology);
  ont_export->add_option("--selections", o.selections);
  ont_export->add_option("--subject", o.subject);
  ont_export->add_option("--predicate", o.predicate);
  ont_export->add_option("--object", o.object);
  ont_export->add_option("--event-id", o.event_id);
  ont_export->add_option("-o,--output", o.output);

  auto* ent = app.add_subcommand("entities", "Build or query the entity repository");
  ent->require_subcommand(1);
  auto* ent_build = ent->add_subcommand("build", "Merge raw entity entries");
  ent_build->add_option("--source", o.source)->required();
  ent_build->add_option("-o,--output", o.output)->required();
  auto* ent_lookup = ent->add_subcommand("lookup", "Resolve a mention");
  ent_lookup->add_option("--repo", o.repo)->required();
  ent_lookup->add_option("text", o.text)->required();
  ent_lookup->add_flag("--require-description", c.require_description);

  auto* annotate = app.add_subcommand("annotate", "Annotate corpus sentences");
  annotate->add_option("--corpus", c.corpus);
  annotate->add_option("--ontology", c.ontology);
  annotate->add_option("--entities", c.entities);
  annotate->add_flag("--noun-predicates", c.noun_predicates);
  annotate->add_flag("--enforce-roles", c.enforce_roles);
  annotate->add_flag("--require-description", c.require_description);
  annotate->add_option("-o,--output", o.output)->required();
  add_config_option(annotate, o);

  auto* extract = app.add_subcommand("extract", "Group sentences into events and candidates");
  extract->add_option("--annotated", o.annotated)->required();
  extract->add_option("--ontology", c.ontology);
  extract->add_option("-o,--output", o.output)->required();

  auto* select = app.add_subcommand("select", "Select one quintuple per event");
  select->add_option("--candidates", o.candidates)->required();
  select->add_option("--method", o.method)
      ->check(CLI::IsMember({"earliest", "latest", "frequent", "supervised"}));
  select->add_option("--model", c.model);
  select->add_option("--gamma", c.gamma);
  select->add_option("-o,--output", o.output)->required();
  add_config_option(select, o);

  auto* train = app.add_subcommand("train", "Train the supervised ranker");
  train->add_option("--candidates", o.candidates)->required();
  train->add_option("--truth", o.truth)->required();
  train->add_option("--ontology", c.ontology);
  train->add_option("--seed", c.forest.seed);
  train->add_option("--n-trees", c.forest.n_trees);
  train->add_option("--max-depth", c.forest.max_depth);
  train->add_option("-o,--output", o.output)->required();
  add_config_option(train, o);

  auto* importance = app.add_subcommand("importance", "Gini importance of a model's features");
  importance->add_option("--model", c.model)->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score selections against ground truth");
  evaluate->add_option("--selections", o.selections)->required();
  evaluate->add_option("--truth", o.truth)->required();
  evaluate->add_option("--mode", o.mode)->check(CLI::IsMember({"events", "strict", "relaxed"}));
  evaluate->add_option("--ontology", c.ontology);
  add_config_option(evaluate, o);

  auto* loocv = app.add_subcommand("loocv", "Leave-one-company-out cross-validation");
  loocv->add_option("--corpus", c.corpus);
  loocv->add_option("--truth", o.truth)->required();
  loocv->add_option("--ontology", c.ontology);
  loocv->add_option("--entities", c.entities);
  loocv->add_option("-o,--output", o.output, "Write the report as JSON");
  add_config_option(loocv, o);

  auto* serve = app.add_subcommand("serve", "Serve the curation API");
  serve->add_option("--data", o.data)->required();
  serve->add_option("--port", o.port);
  serve->add_option("--host", o.host);
  serve->add_option("--gamma", c.gamma);

  auto* stats = app.add_subcommand("stats", "Counts for annotated or candidate files");
  stats->add_option("--annotated", o.annotated);
  stats->add_option("--candidates", o.candidates);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.config_file) apply_config_file(*o.config_file, c);
    Runner runner(o, out, err);
    if (ont_build->parsed()) {
      runner.ontology_build();
    } else if (ont_export->parsed()) {
      runner.ontology_export_triples();
    } else if (ent_build->parsed()) {
      runner.entities_build();
    } else if (ent_lookup->parsed()) {
      runner.entities_lookup();
    } else if (annotate->parsed()) {
      runner.annotate();
    } else if (extract->parsed()) {
      runner.extract();
    } else if (select->parsed()) {
      runner.select();
    } else if (train->parsed()) {
      runner.train();
    } else if (importance->parsed()) {
      runner.importance();
    } else if (evaluate->parsed()) {
      runner.evaluate();
    } else if (loocv->parsed()) {
      runner.loocv();
    } else if (serve->parsed()) {
      runner.serve();
    } else if (stats->parsed()) {
      runner.stats();
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace evkb::cli

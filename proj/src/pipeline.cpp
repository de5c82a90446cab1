// Copyright 2026 The folkso Authors
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

#include "folkso/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "folkso/baseline.hpp"
#include "folkso/errors.hpp"

namespace fs = std::filesystem;

namespace folkso {
namespace {

void write_text_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string canonical_config_text(const PipelineConfig& cfg) {
  std::ostringstream out;
  out << "constraint=" << to_string(cfg.constraint) << "\n"
      << "top_k=" << cfg.top_k << "\n"
      << "epsilon=" << cfg.epsilon << "\n"
      << "baseline_threshold=" << cfg.baseline_threshold << "\n"
      << "baseline_min_support=" << cfg.baseline_min_support << "\n";
  return out.str();
}

std::string stoplist_text(const NormalizerConfig& normalizer) {
  std::string joined;
  for (const auto& word : normalizer.stoplist) {
    joined += word;
    joined.push_back('\n');
  }
  return joined;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

void write_manifest(const fs::path& path, const PipelineConfig& cfg,
                    const NormalizerConfig& normalizer) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["config_hash"] = hex64(fnv1a64(canonical_config_text(cfg)));
  doc["stoplist_hash"] = hex64(fnv1a64(stoplist_text(normalizer)));
  doc["constraint"] = to_string(cfg.constraint);
  doc["top_k"] = cfg.top_k;
  doc["epsilon"] = cfg.epsilon;
  doc["normalizer"]["separators"] = normalizer.separators;
  doc["normalizer"]["stoplist"] =
      std::vector<std::string>(normalizer.stoplist.begin(), normalizer.stoplist.end());
  write_text_file(path, doc.dump(2) + "\n");
}

NormalizerConfig read_manifest_normalizer(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("missing manifest next to graph artifact: " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": malformed manifest: " + e.what());
  }
  NormalizerConfig normalizer;
  try {
    normalizer.separators = doc.at("normalizer").at("separators").get<std::string>();
    normalizer.stoplist.clear();
    for (const auto& word : doc.at("normalizer").at("stoplist")) {
      normalizer.stoplist.insert(word.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": manifest missing normalizer settings: " + e.what());
  }
  return normalizer;
}

// Retained relations with their forward support and tie flag.
void write_relations_tsv(const fs::path& path, const RelationSet& relations,
                         const std::map<Relation, int>& support) {
  std::vector<std::tuple<int, Relation, bool>> rows;
  rows.reserve(relations.relations.size());
  for (const auto& rel : relations.relations) {
    rows.emplace_back(support.at(rel), rel, relations.symmetric_ties.count(rel) > 0);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::ostringstream out;
  for (const auto& [n, rel, tie] : rows) {
    out << rel.broader << '\t' << rel.narrower << '\t' << n << '\t' << (tie ? 1 : 0) << '\n';
  }
  write_text_file(path, out.str());
}

std::string ratio_text(const Rational& r) {
  if (r.num % r.den == 0) return std::to_string(r.num / r.den);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", r.value());
  return buf;
}

std::string sanitize_filename(const Term& term) {
  std::string out;
  for (char c : term) {
    bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '-' || c == '_';
    out.push_back(safe ? c : '_');
  }
  return out.empty() ? "_" : out;
}

ConceptGraph load_graph_artifact(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph artifact: " + path.string());
  if (path.extension() == ".graphml") return read_graph_graphml(in);
  return read_graph_tsv(in);
}

std::vector<Term> nearest_neighbors(const std::set<Term>& nodes, const Term& query,
                                    std::size_t count) {
  std::vector<Term> sorted(nodes.begin(), nodes.end());
  auto pos = std::lower_bound(sorted.begin(), sorted.end(), query);
  std::vector<Term> result;
  auto lo = pos;
  auto hi = pos;
  while (result.size() < count && (lo != sorted.begin() || hi != sorted.end())) {
    if (hi != sorted.end()) result.push_back(*hi++);
    if (result.size() < count && lo != sorted.begin()) result.push_back(*--lo);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": malformed JSON: " + e.what());
  }
  PipelineConfig cfg;
  try {
    if (doc.contains("constraint")) cfg.constraint = parse_constraint(doc["constraint"]);
    if (doc.contains("top_k")) cfg.top_k = doc["top_k"].get<int>();
    if (doc.contains("epsilon")) {
      cfg.epsilon = doc["epsilon"].is_string()
                        ? doc["epsilon"].get<std::string>()
                        : nlohmann::json(doc["epsilon"]).dump();
    }
    if (doc.contains("stoplist_path")) cfg.stoplist_path = doc["stoplist_path"].get<std::string>();
    if (doc.contains("baseline_threshold")) {
      cfg.baseline_threshold = doc["baseline_threshold"].get<double>();
    }
    if (doc.contains("baseline_min_support")) {
      cfg.baseline_min_support = doc["baseline_min_support"].get<int>();
    }
    if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();
    if (doc.contains("format")) cfg.format = parse_input_format(doc["format"]);
    if (doc.contains("max_depth")) cfg.max_depth = doc["max_depth"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": invalid config: " + e.what());
  }
  return cfg;
}

void PipelineConfig::validate() const {
  if (top_k < 0) throw ConfigError("top_k must be non-negative");
  make_prune_config();  // validates epsilon
  if (baseline_threshold <= 0.0 || baseline_threshold > 1.0) {
    throw ConfigError("baseline_threshold must be in (0, 1]");
  }
  if (baseline_min_support < 1) throw ConfigError("baseline_min_support must be positive");
  if (max_depth && *max_depth < 1) throw ConfigError("max_depth must be positive");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

NormalizerConfig PipelineConfig::make_normalizer() const {
  NormalizerConfig normalizer;
  if (stoplist_path) normalizer.stoplist = load_stoplist(*stoplist_path);
  normalizer.validate();
  return normalizer;
}

PruneConfig PipelineConfig::make_prune_config() const {
  PruneConfig prune;
  prune.set_epsilon(epsilon);
  prune.top_k = top_k;
  prune.validate();
  return prune;
}

std::string BuildReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["records"] = records;
  doc["users"] = users;
  doc["raw_relations"] = raw_relations;
  doc["relations_after_constraint"] = relations_after_constraint;
  doc["symmetric_ties"] = symmetric_ties;
  doc["concepts_before_pruning"] = concepts_before_pruning;
  doc["concepts_removed"] = concepts_removed;
  doc["concepts_after_pruning"] = concepts_after_pruning;
  doc["constraint"] = constraint;
  doc["top_k"] = top_k;
  doc["epsilon"] = epsilon;
  return doc.dump(2) + "\n";
}

void BuildReport::print_summary(std::ostream& out) const {
  out << "build: " << records << " records from " << users << " users, "
      << raw_relations << " raw relations -> " << relations_after_constraint
      << " after " << constraint << " constraint; concepts "
      << concepts_before_pruning << " -> " << concepts_after_pruning
      << " (top " << concepts_removed << " by degree ratio discarded)\n";
}

BuildReport run_build(const std::string& input, const PipelineConfig& cfg,
                      std::ostream* diag) {
  cfg.validate();
  NormalizerConfig normalizer = cfg.make_normalizer();
  PruneConfig prune_cfg = cfg.make_prune_config();

  LoadReport load_report;
  Corpus corpus = load_corpus(input, cfg.format, &load_report);
  if (diag) load_report.print(*diag);

  std::vector<RelationTally> tallies = tally_users(corpus, normalizer);
  RelationSet retained = resolve_conflicts(tallies, cfg.constraint);
  PruneResult pruned = prune_concepts(retained, prune_cfg);

  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  {
    std::ostringstream out;
    write_tallies_tsv(out, tallies);
    write_text_file(dir / "tallies.tsv", out.str());
  }
  {
    std::map<Relation, int> support;
    for (const auto& t : tallies) support[{t.broader, t.narrower}] = t.user_support;
    write_relations_tsv(dir / "relations.tsv", retained, support);
  }
  {
    std::ostringstream out;
    for (const auto& [term, ratio] : pruned.removed) {
      out << term << '\t' << ratio_text(ratio) << '\n';
    }
    write_text_file(dir / "pruned_concepts.tsv", out.str());
  }
  write_text_file(dir / "graph.tsv", export_graph(pruned.graph, ExportFormat::tsv));
  write_text_file(dir / "graph.graphml", export_graph(pruned.graph, ExportFormat::graphml));
  write_manifest(dir / "manifest.json", cfg, normalizer);

  BuildReport report;
  report.records = corpus.record_count;
  report.users = corpus.user_count;
  report.raw_relations = tallies.size();
  report.relations_after_constraint = retained.relations.size();
  report.symmetric_ties = retained.symmetric_ties.size();
  report.concepts_before_pruning = pruned.graph.node_count() + pruned.removed.size();
  report.concepts_removed = pruned.removed.size();
  report.concepts_after_pruning = pruned.graph.node_count();
  report.constraint = to_string(cfg.constraint);
  report.top_k = cfg.top_k;
  report.epsilon = cfg.epsilon;
  write_text_file(dir / "report.json", report.to_json());
  return report;
}

std::string ExtractReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["focus"] = focus;
  doc["parents"] = parents;
  doc["children"] = children;
  doc["descendants"] = descendants;
  doc["files"] = files;
  return doc.dump(2) + "\n";
}

ExtractReport run_extract(const std::string& graph_path, const std::string& query,
                          const PipelineConfig& cfg) {
  cfg.validate();
  fs::path path(graph_path);
  NormalizerConfig normalizer = read_manifest_normalizer(path.parent_path() / "manifest.json");
  ConceptGraph graph = load_graph_artifact(path);

  std::vector<Term> terms = normalize_name(query, normalizer);
  if (terms.size() != 1) {
    throw InputError("query '" + query + "' normalizes to " +
                     std::to_string(terms.size()) + " terms; need exactly 1");
  }
  const Term& focus = terms[0];
  if (!graph.has_node(focus)) {
    std::string message = "concept not found in graph: '" + focus + "'";
    auto near = nearest_neighbors(graph.nodes(), focus, 5);
    if (!near.empty()) {
      message += "; nearest concepts:";
      for (const auto& n : near) message += " '" + n + "'";
    }
    throw InputError(message);
  }

  SubgraphView view = extract_subgraph(graph, focus, cfg.max_depth);

  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  std::string stem = "subgraph_" + sanitize_filename(focus);
  ExtractReport report;
  report.focus = focus;
  report.parents = view.parents.size();
  report.children = view.children.size();
  report.descendants = view.descendants.size();
  for (auto format : {ExportFormat::dot, ExportFormat::graphml}) {
    std::string name = stem + (format == ExportFormat::dot ? ".dot" : ".graphml");
    write_text_file(dir / name, export_graph(view, format));
    report.files.push_back((dir / name).string());
  }
  return report;
}

std::string BaselineReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["records"] = records;
  doc["users"] = users;
  doc["documents"] = documents;
  doc["baseline_edges"] = baseline_edges;
  doc["relation_edges"] = relation_edges;
  doc["shared"] = shared;
  doc["only_baseline"] = only_baseline;
  doc["only_relation"] = only_relation;
  doc["threshold"] = threshold;
  doc["min_support"] = min_support;
  return doc.dump(2) + "\n";
}

void BaselineReport::print_summary(std::ostream& out) const {
  out << "baseline: " << documents << " documents, " << baseline_edges
      << " subsumption edges vs " << relation_edges
      << " relation edges (shared " << shared << ", baseline-only "
      << only_baseline << ", relation-only " << only_relation << ")\n";
}

BaselineReport run_baseline(const std::string& input, const PipelineConfig& cfg,
                            std::ostream* diag) {
  cfg.validate();
  NormalizerConfig normalizer = cfg.make_normalizer();

  LoadReport load_report;
  Corpus corpus = load_corpus(input, cfg.format, &load_report);
  if (diag) load_report.print(*diag);

  std::vector<TermDocument> docs = build_documents(corpus, normalizer);
  std::vector<Relation> baseline_edges =
      induce_baseline_hierarchy(docs, cfg.baseline_threshold, cfg.baseline_min_support);

  std::vector<RelationTally> tallies = tally_users(corpus, normalizer);
  RelationSet retained = resolve_conflicts(tallies, cfg.constraint);
  PruneResult pruned = prune_concepts(retained, cfg.make_prune_config());
  std::vector<Relation> relation_edges = pruned.graph.edges();

  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  {
    std::ostringstream out;
    for (const auto& e : baseline_edges) out << e.broader << '\t' << e.narrower << '\n';
    write_text_file(dir / "baseline_edges.tsv", out.str());
  }
  {
    std::ostringstream out;
    for (const auto& e : relation_edges) out << e.broader << '\t' << e.narrower << '\n';
    write_text_file(dir / "relation_edges.tsv", out.str());
  }

  std::set<Relation> baseline_set(baseline_edges.begin(), baseline_edges.end());
  std::set<Relation> relation_set(relation_edges.begin(), relation_edges.end());
  BaselineReport report;
  report.records = corpus.record_count;
  report.users = corpus.user_count;
  report.documents = docs.size();
  report.baseline_edges = baseline_set.size();
  report.relation_edges = relation_set.size();
  for (const auto& e : baseline_set) {
    if (relation_set.count(e)) {
      report.shared++;
    } else {
      report.only_baseline++;
    }
  }
  report.only_relation = relation_set.size() - report.shared;
  report.threshold = cfg.baseline_threshold;
  report.min_support = cfg.baseline_min_support;
  return report;
}

}  // namespace folkso

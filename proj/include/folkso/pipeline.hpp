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

#ifndef FOLKSO_PIPELINE_HPP
#define FOLKSO_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "folkso/aggregate.hpp"
#include "folkso/corpus.hpp"
#include "folkso/graph.hpp"
#include "folkso/normalize.hpp"

namespace folkso {

inline constexpr const char* kToolVersion = "0.1.0";

/// End-to-end run parameters. Flags override the JSON config file;
/// both map onto this struct.
struct PipelineConfig {
  Constraint constraint = Constraint::soft;
  int top_k = 200;
  std::string epsilon = "0.01";
  std::optional<std::string> stoplist_path;
  double baseline_threshold = 0.8;
  int baseline_min_support = 2;
  std::string output_dir = ".";
  InputFormat format = InputFormat::jsonl;
  std::optional<int> max_depth;  // subgraph extraction cap

  static PipelineConfig from_json_file(const std::string& path);
  void validate() const;  // throws ConfigError

  /// Normalizer assembled from the stoplist path (or defaults).
  NormalizerConfig make_normalizer() const;
  PruneConfig make_prune_config() const;
};

/// 64-bit FNV-1a, used for the config and stoplist fingerprints in the
/// manifest.
std::uint64_t fnv1a64(std::string_view data);

/// Counts at every pipeline stage; serializes to the run report JSON.
struct BuildReport {
  std::size_t records = 0;
  std::size_t users = 0;
  std::size_t raw_relations = 0;
  std::size_t relations_after_constraint = 0;
  std::size_t symmetric_ties = 0;
  std::size_t concepts_before_pruning = 0;
  std::size_t concepts_removed = 0;
  std::size_t concepts_after_pruning = 0;
  std::string constraint;
  int top_k = 0;
  std::string epsilon;

  std::string to_json() const;
  void print_summary(std::ostream& out) const;
};

/// Runs ingest -> tally -> resolve -> prune -> link, persisting
/// tallies.tsv, relations.tsv, pruned_concepts.tsv, graph.tsv,
/// graph.graphml, manifest.json and report.json under
/// cfg.output_dir. Byte-identical artifacts for identical
/// (input, config). Load diagnostics go to *diag when given.
BuildReport run_build(const std::string& input, const PipelineConfig& cfg,
                      std::ostream* diag = nullptr);

struct ExtractReport {
  Term focus;
  std::size_t parents = 0;
  std::size_t children = 0;
  std::size_t descendants = 0;
  std::vector<std::string> files;

  std::string to_json() const;
};

/// Loads a graph artifact (graph.tsv or graph.graphml; the manifest
/// must sit next to it), normalizes the query with the build-time
/// normalizer, and writes the role-annotated subgraph as DOT and
/// GraphML. Unknown concepts raise InputError listing the nearest
/// lexicographic neighbors.
ExtractReport run_extract(const std::string& graph_path, const std::string& query,
                          const PipelineConfig& cfg);

struct BaselineReport {
  std::size_t records = 0;
  std::size_t users = 0;
  std::size_t documents = 0;
  std::size_t baseline_edges = 0;
  std::size_t relation_edges = 0;
  std::size_t shared = 0;
  std::size_t only_baseline = 0;
  std::size_t only_relation = 0;
  double threshold = 0.0;
  int min_support = 0;

  std::string to_json() const;
  void print_summary(std::ostream& out) const;
};

/// Runs the co-occurrence subsumption baseline next to the
/// relation-based pipeline and diffs the two edge sets. Writes
/// baseline_edges.tsv and relation_edges.tsv under cfg.output_dir.
BaselineReport run_baseline(const std::string& input, const PipelineConfig& cfg,
                            std::ostream* diag = nullptr);

}  // namespace folkso

#endif  // FOLKSO_PIPELINE_HPP

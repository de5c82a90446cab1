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

#ifndef FOLKSO_GRAPH_HPP
#define FOLKSO_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folkso/aggregate.hpp"
#include "folkso/normalize.hpp"

namespace folkso {

/// Directed concept graph. Node and adjacency sets are ordered so every
/// traversal and export is deterministic.
class ConceptGraph {
 public:
  void add_node(const Term& node);
  void add_edge(const Term& broader, const Term& narrower);

  const std::set<Term>& nodes() const { return nodes_; }
  bool has_node(const Term& node) const { return nodes_.count(node) > 0; }
  bool has_edge(const Term& broader, const Term& narrower) const;

  /// Out-neighbors (narrower concepts) of a node; empty set if none.
  const std::set<Term>& out(const Term& node) const;
  /// In-neighbors (broader concepts) of a node; empty set if none.
  const std::set<Term>& in(const Term& node) const;

  std::size_t din(const Term& node) const { return in(node).size(); }
  std::size_t dout(const Term& node) const { return out(node).size(); }

  std::vector<Relation> edges() const;  // sorted
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

 private:
  std::set<Term> nodes_;
  std::map<Term, std::set<Term>> out_;
  std::map<Term, std::set<Term>> in_;
  std::size_t edge_count_ = 0;
};

/// Exact positive rational, used for degree ratios so ranking and the
/// documented ratio values carry no floating-point noise.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

/// Exact comparison via cross-multiplication.
bool rational_less(const Rational& a, const Rational& b);

struct PruneConfig {
  /// Smoothing constant epsilon = eps_num / eps_den added to both
  /// degrees; default 0.01.
  std::int64_t eps_num = 1;
  std::int64_t eps_den = 100;
  /// Number of highest-ratio concepts to discard.
  int top_k = 200;

  /// Parses a plain decimal ("0.01", "2", ".5") into the exact
  /// epsilon. Throws ConfigError for anything else or epsilon <= 0.
  void set_epsilon(const std::string& decimal);
  std::string epsilon_text() const;
  void validate() const;
};

/// Smoothed out/in-degree ratio (dout + eps) / (din + eps). High values
/// mark overly broad concepts. Throws InputError for unknown concepts.
Rational degree_ratio(const Term& node, const ConceptGraph& g, const PruneConfig& cfg);

ConceptGraph build_graph(std::span<const Relation> relations);

struct PruneResult {
  ConceptGraph graph;
  /// Discarded concepts with their ratios, in removal order
  /// (ratio descending, ties broken lexicographically).
  std::vector<std::pair<Term, Rational>> removed;
};

/// Builds the graph from the retained relations, ranks nodes by
/// degree_ratio once, discards the top_k highest (fewer when the graph
/// is smaller) together with their incident edges.
PruneResult prune_concepts(const RelationSet& relations, const PruneConfig& cfg);

enum class Role { focus, parent, child, descendant };

std::string to_string(Role role);

/// Role-annotated neighborhood of one concept: its direct parents, its
/// children, and everything reachable below the children.
struct SubgraphView {
  Term focus;
  std::set<Term> parents;
  std::set<Term> children;
  std::set<Term> descendants;
  std::vector<Relation> edges;  // sorted, both endpoints in the view
  std::map<Term, Role> roles;
};

/// Per-traversal instrumentation; visit_counts records how often each
/// node was expanded (always <= 1 thanks to the visited set).
struct TraversalStats {
  std::size_t nodes_visited = 0;
  std::map<Term, int> visit_counts;
};

/// Breadth-first walk from focus along out-edges. Parents are the
/// in-neighbors of focus only. Cycles terminate via the visited set.
/// max_depth, when given, caps the walk (1 = children only).
SubgraphView extract_subgraph(const ConceptGraph& g, const Term& focus,
                              std::optional<int> max_depth = std::nullopt,
                              TraversalStats* stats = nullptr);

enum class ExportFormat { dot, graphml, tsv };

ExportFormat parse_export_format(const std::string& name);

/// Serializes a graph. DOT and GraphML list nodes and edges in
/// lexicographic order; TSV emits "broader TAB narrower" lines. Output
/// is byte-deterministic.
std::string export_graph(const ConceptGraph& g, ExportFormat format);

/// Subgraph serialization; DOT fills nodes yellow/pink/green/blue for
/// focus/parent/child/descendant, GraphML carries the role as a node
/// attribute.
std::string export_graph(const SubgraphView& view, ExportFormat format);

/// Reads back the TSV edge list (exact round trip of the edge set).
ConceptGraph read_graph_tsv(std::istream& in);

/// Reads back GraphML produced by export_graph (including isolated
/// nodes). Not a general-purpose GraphML parser.
ConceptGraph read_graph_graphml(std::istream& in);

}  // namespace folkso

#endif  // FOLKSO_GRAPH_HPP

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

#include "folkso/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

#include "folkso/errors.hpp"

namespace folkso {
namespace {

const std::set<Term>& empty_term_set() {
  static const std::set<Term> empty;
  return empty;
}

bool is_bare_dot_id(const Term& term) {
  if (term.empty()) return false;
  bool numeral = std::all_of(term.begin(), term.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (numeral) return true;
  if (std::isdigit(static_cast<unsigned char>(term[0]))) return false;
  return std::all_of(term.begin(), term.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

std::string dot_id(const Term& term) {
  if (is_bare_dot_id(term)) return term;
  std::string quoted = "\"";
  for (char c : term) {
    if (c == '"' || c == '\\') quoted.push_back('\\');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string xml_escape(const Term& term) {
  std::string out;
  out.reserve(term.size());
  for (char c : term) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string xml_unescape(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] != '&') {
      out.push_back(in[i++]);
      continue;
    }
    auto match = [&](std::string_view entity, char ch) {
      if (in.substr(i, entity.size()) == entity) {
        out.push_back(ch);
        i += entity.size();
        return true;
      }
      return false;
    };
    if (match("&amp;", '&') || match("&lt;", '<') || match("&gt;", '>') ||
        match("&quot;", '"') || match("&apos;", '\'')) {
      continue;
    }
    out.push_back(in[i++]);
  }
  return out;
}

const char* role_color(Role role) {
  switch (role) {
    case Role::focus: return "yellow";
    case Role::parent: return "pink";
    case Role::child: return "green";
    case Role::descendant: return "blue";
  }
  return "gray";
}

std::string export_dot(const std::vector<Term>& nodes,
                       const std::vector<Relation>& edges,
                       const std::map<Term, Role>* roles) {
  std::ostringstream out;
  out << "digraph folksonomy {\n";
  if (roles) out << "  node [style=filled];\n";
  for (const auto& node : nodes) {
    out << "  " << dot_id(node);
    if (roles) out << " [fillcolor=" << role_color(roles->at(node)) << "]";
    out << ";\n";
  }
  for (const auto& e : edges) {
    out << "  " << dot_id(e.broader) << " -> " << dot_id(e.narrower) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graphml(const std::vector<Term>& nodes,
                           const std::vector<Relation>& edges,
                           const std::map<Term, Role>* roles) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  if (roles) {
    out << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n";
  }
  out << "  <graph id=\"folksonomy\" edgedefault=\"directed\">\n";
  for (const auto& node : nodes) {
    if (roles) {
      out << "    <node id=\"" << xml_escape(node) << "\"><data key=\"role\">"
          << to_string(roles->at(node)) << "</data></node>\n";
    } else {
      out << "    <node id=\"" << xml_escape(node) << "\"/>\n";
    }
  }
  for (const auto& e : edges) {
    out << "    <edge source=\"" << xml_escape(e.broader) << "\" target=\""
        << xml_escape(e.narrower) << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string export_tsv(const std::vector<Relation>& edges) {
  std::ostringstream out;
  for (const auto& e : edges) {
    out << e.broader << '\t' << e.narrower << '\n';
  }
  return out.str();
}

std::string serialize(const std::vector<Term>& nodes, const std::vector<Relation>& edges,
                      const std::map<Term, Role>* roles, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot: return export_dot(nodes, edges, roles);
    case ExportFormat::graphml: return export_graphml(nodes, edges, roles);
    case ExportFormat::tsv: return export_tsv(edges);
  }
  return {};
}

}  // namespace

void ConceptGraph::add_node(const Term& node) { nodes_.insert(node); }

void ConceptGraph::add_edge(const Term& broader, const Term& narrower) {
  nodes_.insert(broader);
  nodes_.insert(narrower);
  if (out_[broader].insert(narrower).second) {
    in_[narrower].insert(broader);
    edge_count_++;
  }
}

bool ConceptGraph::has_edge(const Term& broader, const Term& narrower) const {
  auto it = out_.find(broader);
  return it != out_.end() && it->second.count(narrower) > 0;
}

const std::set<Term>& ConceptGraph::out(const Term& node) const {
  auto it = out_.find(node);
  return it == out_.end() ? empty_term_set() : it->second;
}

const std::set<Term>& ConceptGraph::in(const Term& node) const {
  auto it = in_.find(node);
  return it == in_.end() ? empty_term_set() : it->second;
}

std::vector<Relation> ConceptGraph::edges() const {
  std::vector<Relation> result;
  result.reserve(edge_count_);
  for (const auto& [broader, narrowers] : out_) {
    for (const auto& narrower : narrowers) {
      result.push_back({broader, narrower});
    }
  }
  return result;
}

bool rational_less(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

void PruneConfig::set_epsilon(const std::string& decimal) {
  std::size_t dot = decimal.find('.');
  std::string digits = dot == std::string::npos
                           ? decimal
                           : decimal.substr(0, dot) + decimal.substr(dot + 1);
  std::size_t frac_digits = dot == std::string::npos ? 0 : decimal.size() - dot - 1;
  // Nine fractional digits keep dout * eps_den well inside int64.
  if (digits.empty() || frac_digits > 9 || digits.size() > 10 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw ConfigError("epsilon must be a plain positive decimal, got: " + decimal);
  }
  std::int64_t num = 0;
  for (char c : digits) num = num * 10 + (c - '0');
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_digits; i++) den *= 10;
  if (num <= 0) throw ConfigError("epsilon must be positive, got: " + decimal);
  std::int64_t g = std::gcd(num, den);
  eps_num = num / g;
  eps_den = den / g;
}

std::string PruneConfig::epsilon_text() const {
  if (eps_den == 1) return std::to_string(eps_num);
  std::ostringstream out;
  out << static_cast<double>(eps_num) / static_cast<double>(eps_den);
  return out.str();
}

void PruneConfig::validate() const {
  if (eps_num <= 0 || eps_den <= 0) throw ConfigError("epsilon must be positive");
  if (top_k < 0) throw ConfigError("top_k must be non-negative");
}

Rational degree_ratio(const Term& node, const ConceptGraph& g, const PruneConfig& cfg) {
  if (!g.has_node(node)) throw InputError("unknown concept: " + node);
  auto dout = static_cast<std::int64_t>(g.dout(node));
  auto din = static_cast<std::int64_t>(g.din(node));
  return {dout * cfg.eps_den + cfg.eps_num, din * cfg.eps_den + cfg.eps_num};
}

ConceptGraph build_graph(std::span<const Relation> relations) {
  ConceptGraph g;
  for (const auto& rel : relations) {
    g.add_edge(rel.broader, rel.narrower);
  }
  return g;
}

PruneResult prune_concepts(const RelationSet& relations, const PruneConfig& cfg) {
  cfg.validate();
  ConceptGraph full = build_graph(relations.relations);

  std::vector<std::pair<Term, Rational>> ranked;
  ranked.reserve(full.node_count());
  for (const auto& node : full.nodes()) {
    ranked.emplace_back(node, degree_ratio(node, full, cfg));
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (rational_less(b.second, a.second)) return true;
    if (rational_less(a.second, b.second)) return false;
    return a.first < b.first;
  });

  std::size_t remove_n = std::min<std::size_t>(static_cast<std::size_t>(cfg.top_k),
                                               ranked.size());
  PruneResult result;
  result.removed.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(remove_n));

  std::set<Term> removed_set;
  for (const auto& [term, ratio] : result.removed) removed_set.insert(term);

  for (const auto& node : full.nodes()) {
    if (!removed_set.count(node)) result.graph.add_node(node);
  }
  for (const auto& edge : full.edges()) {
    if (!removed_set.count(edge.broader) && !removed_set.count(edge.narrower)) {
      result.graph.add_edge(edge.broader, edge.narrower);
    }
  }
  return result;
}

std::string to_string(Role role) {
  switch (role) {
    case Role::focus: return "focus";
    case Role::parent: return "parent";
    case Role::child: return "child";
    case Role::descendant: return "descendant";
  }
  return "unknown";
}

SubgraphView extract_subgraph(const ConceptGraph& g, const Term& focus,
                              std::optional<int> max_depth, TraversalStats* stats) {
  if (!g.has_node(focus)) throw InputError("unknown concept: " + focus);
  if (max_depth && *max_depth < 1) throw ConfigError("max_depth must be positive");

  SubgraphView view;
  view.focus = focus;
  view.parents = g.in(focus);

  std::set<Term> visited{focus};
  std::deque<std::pair<Term, int>> queue{{focus, 0}};
  while (!queue.empty()) {
    auto [node, depth] = queue.front();
    queue.pop_front();
    if (stats) {
      stats->nodes_visited++;
      stats->visit_counts[node]++;
    }
    if (max_depth && depth >= *max_depth) continue;
    for (const auto& next : g.out(node)) {
      if (visited.insert(next).second) {
        queue.emplace_back(next, depth + 1);
      }
    }
  }

  view.children = g.out(focus);
  for (const auto& node : visited) {
    if (node != focus && !view.parents.count(node) && !view.children.count(node)) {
      view.descendants.insert(node);
    }
  }

  std::set<Term> included = visited;
  included.insert(view.parents.begin(), view.parents.end());

  for (const auto& node : included) {
    for (const auto& next : g.out(node)) {
      if (included.count(next)) view.edges.push_back({node, next});
    }
  }
  std::sort(view.edges.begin(), view.edges.end());

  view.roles[focus] = Role::focus;
  for (const auto& p : view.parents) view.roles.try_emplace(p, Role::parent);
  for (const auto& c : view.children) view.roles.try_emplace(c, Role::child);
  for (const auto& d : view.descendants) view.roles.try_emplace(d, Role::descendant);
  return view;
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "graphml") return ExportFormat::graphml;
  if (name == "tsv") return ExportFormat::tsv;
  throw ConfigError("unknown export format: " + name + " (expected dot, graphml or tsv)");
}

std::string export_graph(const ConceptGraph& g, ExportFormat format) {
  std::vector<Term> nodes(g.nodes().begin(), g.nodes().end());
  return serialize(nodes, g.edges(), nullptr, format);
}

std::string export_graph(const SubgraphView& view, ExportFormat format) {
  std::vector<Term> nodes;
  nodes.reserve(view.roles.size());
  for (const auto& [node, role] : view.roles) nodes.push_back(node);
  return serialize(nodes, view.edges, &view.roles, format);
}

ConceptGraph read_graph_tsv(std::istream& in) {
  ConceptGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw InputError("graph TSV line " + std::to_string(line_no) +
                       ": expected 2 tab-separated columns");
    }
    g.add_edge(line.substr(0, tab), line.substr(tab + 1));
  }
  return g;
}

ConceptGraph read_graph_graphml(std::istream& in) {
  ConceptGraph g;
  std::string line;
  auto attr = [](const std::string& text, std::string_view name) -> std::optional<std::string> {
    std::string needle = std::string(name) + "=\"";
    auto start = text.find(needle);
    if (start == std::string::npos) return std::nullopt;
    start += needle.size();
    auto end = text.find('"', start);
    if (end == std::string::npos) return std::nullopt;
    return xml_unescape(std::string_view(text).substr(start, end - start));
  };
  while (std::getline(in, line)) {
    if (line.find("<node ") != std::string::npos) {
      if (auto id = attr(line, "id")) g.add_node(*id);
    } else if (line.find("<edge ") != std::string::npos) {
      auto source = attr(line, "source");
      auto target = attr(line, "target");
      if (source && target) g.add_edge(*source, *target);
    }
  }
  return g;
}

}  // namespace folkso

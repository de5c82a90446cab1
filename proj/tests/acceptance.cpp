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

// Acceptance suite: one criterion per function, one PASS/FAIL line per
// criterion, exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "folkso/aggregate.hpp"
#include "folkso/baseline.hpp"
#include "folkso/corpus.hpp"
#include "folkso/graph.hpp"
#include "folkso/pipeline.hpp"
#include "folkso/porter.hpp"
#include "folkso/synth.hpp"

using namespace folkso;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string detail;
};

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) throw Failure{std::string(#cond) + " (line " +           \
                               std::to_string(__LINE__) + ")"};           \
  } while (0)

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() /
             ("folkso_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: resolve_conflicts matches a direct re-evaluation of the
// constraint inequalities on 1,000 randomized tally sets; hard subset
// of soft; no 2-cycles under hard. Under 5 seconds.

void criterion_formula_fidelity() {
  auto start = Clock::now();
  SplitMix64 rng(101);
  const std::vector<Term> universe = {"a", "b", "c", "d", "e", "f", "g", "h"};

  for (int iter = 0; iter < 1000; iter++) {
    std::map<Relation, int> support;
    std::vector<RelationTally> tallies;
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        if (x == y) continue;
        int s = static_cast<int>(rng.below(11));  // 0..10; 0 = absent
        if (s > 0) {
          support[{x, y}] = s;
          tallies.push_back({x, y, s});
        }
      }
    }
    RelationSet hard = resolve_conflicts(tallies, Constraint::hard);
    RelationSet soft = resolve_conflicts(tallies, Constraint::soft);
    std::set<Relation> hard_set(hard.relations.begin(), hard.relations.end());
    std::set<Relation> soft_set(soft.relations.begin(), soft.relations.end());

    auto d = [&](const Term& x, const Term& y) {
      auto it = support.find({x, y});
      return it == support.end() ? 0 : it->second;
    };
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        if (x == y) continue;
        int fwd = d(x, y);
        int rev = d(y, x);
        bool expect_hard = fwd > 1 && rev <= 1;
        bool expect_soft = fwd > 1 && rev <= fwd;
        EXPECT(hard_set.count({x, y}) == static_cast<std::size_t>(expect_hard));
        EXPECT(soft_set.count({x, y}) == static_cast<std::size_t>(expect_soft));
      }
    }
    for (const auto& rel : hard_set) {
      EXPECT(soft_set.count(rel) == 1);
      EXPECT(hard_set.count({rel.narrower, rel.broader}) == 0);
    }
  }
  EXPECT(seconds_since(start) < 5.0);
}

// ---------------------------------------------------------------------------
// Criterion 2: tally_users equals the brute-force triple
// materialization oracle on corpora up to 10,000 records; permutation
// and user-record-duplication invariance. Under 30 seconds.

void criterion_counting_oracle() {
  auto start = Clock::now();
  const NormalizerConfig cfg;

  SynthSpec spec;
  spec.taxonomy = {{"animal", "bird"},  {"animal", "insect"}, {"travel", "china"},
                   {"travel", "japan"}, {"travel", "africa"}, {"sport", "soccer"},
                   {"sport", "tennis"}, {"natur", "flower"},  {"natur", "tree"},
                   {"citi", "berlin"}};
  spec.users = 500;
  spec.records_per_user = 20;  // 10,000 records before dedup
  spec.inversion_rate = 0.15;
  spec.idiosyncrasy_rate = 0.1;
  spec.seed = 202;
  Corpus corpus = generate(spec, cfg);
  // 10,000 records before exact-duplicate removal.
  EXPECT(corpus.record_count > 8000);
  EXPECT(corpus.record_count <= 10000);

  auto tallies = tally_users(corpus, cfg);

  // Oracle: materialize (user, collection term, set term) triples,
  // dedup, count distinct users per directed pair.
  std::set<std::tuple<std::string, Term, Term>> triples;
  for (const auto& rec : corpus.records) {
    for (const auto& c : normalize_name(rec.collection_name, cfg)) {
      for (const auto& s : normalize_name(rec.set_name, cfg)) {
        if (c != s) triples.insert({rec.user_id, c, s});
      }
    }
  }
  std::map<Relation, int> oracle;
  for (const auto& [user, c, s] : triples) oracle[{c, s}]++;

  std::map<Relation, int> actual;
  for (const auto& t : tallies) actual[{t.broader, t.narrower}] = t.user_support;
  EXPECT(actual == oracle);

  // Permutation invariance.
  Corpus shuffled = corpus;
  SplitMix64 rng(203);
  for (std::size_t i = shuffled.records.size(); i > 1; i--) {
    std::swap(shuffled.records[i - 1],
              shuffled.records[static_cast<std::size_t>(rng.below(i))]);
  }
  EXPECT(tally_users(shuffled, cfg) == tallies);

  // Duplicating every record of existing users changes nothing.
  Corpus doubled = corpus;
  for (const auto& rec : corpus.records) doubled.records.push_back(rec);
  EXPECT(tally_users(doubled, cfg) == tallies);

  EXPECT(seconds_since(start) < 30.0);
}

// ---------------------------------------------------------------------------
// Criterion 3: planted-taxonomy recovery, noise-free and at inversion
// rate 0.2 with ample per-edge support.

std::vector<Relation> twenty_edge_taxonomy() {
  return {{"animal", "bird"},   {"animal", "insect"}, {"animal", "mammal"},
          {"bird", "robin"},    {"bird", "owl"},      {"insect", "beetl"},
          {"travel", "china"},  {"travel", "japan"},  {"travel", "africa"},
          {"travel", "europ"},  {"countri", "china"}, {"countri", "japan"},
          {"sport", "soccer"},  {"sport", "tenni"},   {"sport", "golf"},
          {"natur", "flower"},  {"natur", "tree"},    {"citi", "berlin"},
          {"citi", "london"},   {"music", "jazz"}};
}

std::set<Relation> pipeline_edges(const Corpus& corpus, Constraint constraint) {
  const NormalizerConfig cfg;
  auto tallies = tally_users(corpus, cfg);
  RelationSet retained = resolve_conflicts(tallies, constraint);
  PruneConfig prune;
  prune.top_k = 0;
  auto edges = prune_concepts(retained, prune).graph.edges();
  return {edges.begin(), edges.end()};
}

void criterion_planted_recovery() {
  const NormalizerConfig cfg;
  std::vector<Relation> taxonomy = twenty_edge_taxonomy();
  std::set<Relation> planted(taxonomy.begin(), taxonomy.end());

  // Noise-free: 50 users, every edge supported by >= 3 users.
  SynthSpec clean;
  clean.taxonomy = taxonomy;
  clean.users = 50;
  clean.records_per_user = 12;
  clean.seed = 301;
  Corpus clean_corpus = generate(clean, cfg);

  std::map<Relation, int> support;
  for (const auto& t : tally_users(clean_corpus, cfg)) {
    support[{t.broader, t.narrower}] = t.user_support;
  }
  for (const auto& edge : taxonomy) EXPECT(support[edge] >= 3);

  EXPECT(pipeline_edges(clean_corpus, Constraint::soft) == planted);

  // 20% inversions, >= 20 users per edge: the majority still wins on
  // every edge at this seed, and no reversed edge survives.
  SynthSpec noisy;
  noisy.taxonomy = taxonomy;
  noisy.users = 50;
  noisy.records_per_user = 30;
  noisy.inversion_rate = 0.2;
  noisy.seed = 302;
  Corpus noisy_corpus = generate(noisy, cfg);

  std::map<Relation, int> noisy_support;
  for (const auto& t : tally_users(noisy_corpus, cfg)) {
    noisy_support[{t.broader, t.narrower}] = t.user_support;
  }
  for (const auto& edge : taxonomy) {
    int fwd = noisy_support[edge];
    int rev = noisy_support[{edge.narrower, edge.broader}];
    EXPECT(fwd >= 20);
    EXPECT(fwd > rev);
  }
  EXPECT(pipeline_edges(noisy_corpus, Constraint::soft) == planted);
}

// ---------------------------------------------------------------------------
// Criterion 4: Porter conformance over the published test vocabulary.

void criterion_porter_conformance() {
  std::ifstream voc(FOLKSO_TEST_DATA_DIR "/porter/voc.txt");
  std::ifstream expected(FOLKSO_TEST_DATA_DIR "/porter/output.txt");
  EXPECT(voc.good());
  EXPECT(expected.good());

  std::string word;
  std::string stem;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  while (std::getline(voc, word) && std::getline(expected, stem)) {
    checked++;
    if (porter_stem(word) != stem) mismatches++;
  }
  EXPECT(checked > 23000);
  EXPECT(mismatches == 0);

  EXPECT(porter_stem("vacations") == "vacat");
  EXPECT(porter_stem("vehicle") == "vehicl");
}

// ---------------------------------------------------------------------------
// Criterion 5: the sparse china/countri co-occurrence induces no
// subsumption edge at thresholds 0.80 down to 0.55, while 5 explicit
// user assertions retain countri -> china in the relation pipeline.

void criterion_baseline_failure_case() {
  const NormalizerConfig cfg;

  // 590 china-only documents, 250 countri-only, 6 joint.
  std::vector<RawRecord> records;
  int user = 0;
  for (int i = 0; i < 590; i++) {
    records.push_back({"u" + std::to_string(user++), "china", "china"});
  }
  for (int i = 0; i < 250; i++) {
    records.push_back({"u" + std::to_string(user++), "countri", "countri"});
  }
  for (int i = 0; i < 6; i++) {
    records.push_back({"u" + std::to_string(user++), "countri", "china"});
  }
  Corpus corpus = Corpus::from_records(std::move(records));
  auto docs = build_documents(corpus, cfg);
  CooccurrenceStats stats = count_cooccurrence(docs);
  EXPECT(stats.frequency("china") == 596);
  EXPECT(stats.frequency("countri") == 256);
  EXPECT(stats.cooccurrence("china", "countri") == 6);

  for (int t = 80; t >= 55; t -= 5) {
    double threshold = static_cast<double>(t) / 100.0;
    EXPECT(!subsumes("countri", "china", stats, threshold));
    EXPECT(!subsumes("china", "countri", stats, threshold));
    auto edges = induce_baseline_hierarchy(docs, threshold);
    EXPECT(std::count(edges.begin(), edges.end(), Relation{"countri", "china"}) == 0);
    EXPECT(std::count(edges.begin(), edges.end(), Relation{"china", "countri"}) == 0);
  }

  // Companion fixture: 5 users assert countri -> china, none reverse.
  std::vector<RawRecord> companion;
  for (int i = 0; i < 5; i++) {
    companion.push_back({"v" + std::to_string(i), "countri", "china"});
  }
  Corpus companion_corpus = Corpus::from_records(std::move(companion));
  for (auto constraint : {Constraint::soft, Constraint::hard}) {
    auto edges = pipeline_edges(companion_corpus, constraint);
    EXPECT((edges == std::set<Relation>{{"countri", "china"}}));
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: star-graph pruning. Hub ratio exactly 43801.0 at
// epsilon 0.01; top_k=1 removes the hub and its edges; top_k=0 is the
// identity.

void criterion_pruning_behavior() {
  RelationSet star;
  star.constraint = Constraint::soft;
  for (int i = 0; i < 438; i++) {
    star.relations.push_back({"hub", "leaf" + std::to_string(i)});
  }

  PruneConfig cfg;  // epsilon 0.01
  cfg.top_k = 1;
  ConceptGraph graph = build_graph(star.relations);
  EXPECT(degree_ratio("hub", graph, cfg).value() == 43801.0);

  PruneResult pruned = prune_concepts(star, cfg);
  EXPECT(pruned.removed.size() == 1);
  EXPECT(pruned.removed[0].first == "hub");
  EXPECT(!pruned.graph.has_node("hub"));
  EXPECT(pruned.graph.edge_count() == 0);
  EXPECT(pruned.graph.node_count() == 438);

  cfg.top_k = 0;
  PruneResult identity = prune_concepts(star, cfg);
  EXPECT(identity.removed.empty());
  EXPECT(identity.graph.nodes() == graph.nodes());
  EXPECT(identity.graph.edges() == graph.edges());
}

// ---------------------------------------------------------------------------
// Criterion 7: two builds on the same fixture and config produce
// byte-identical artifacts and identical JSON reports.

void criterion_determinism() {
  fs::path dir = scratch_dir();
  const NormalizerConfig cfg;

  SynthSpec spec;
  spec.taxonomy = twenty_edge_taxonomy();
  spec.users = 40;
  spec.records_per_user = 15;
  spec.inversion_rate = 0.1;
  spec.idiosyncrasy_rate = 0.05;
  spec.seed = 701;
  Corpus corpus = generate(spec, cfg);
  fs::path input = dir / "fixture.jsonl";
  {
    std::ofstream out(input, std::ios::binary);
    write_corpus_jsonl(out, corpus);
  }

  PipelineConfig a;
  a.constraint = Constraint::soft;
  a.top_k = 5;
  a.output_dir = (dir / "a").string();
  PipelineConfig b = a;
  b.output_dir = (dir / "b").string();

  BuildReport report_a = run_build(input.string(), a);
  BuildReport report_b = run_build(input.string(), b);
  EXPECT(report_a.to_json() == report_b.to_json());

  for (const char* name : {"tallies.tsv", "relations.tsv", "pruned_concepts.tsv",
                           "graph.tsv", "graph.graphml", "manifest.json", "report.json"}) {
    std::string file_a = read_file(dir / "a" / name);
    EXPECT(!file_a.empty());
    EXPECT(file_a == read_file(dir / "b" / name));
  }
  fs::remove_all(dir);
}

// ---------------------------------------------------------------------------
// Criterion 8: subgraph extraction on a 1,000-node cyclic graph
// terminates and visits each node at most once.

void criterion_cycle_safety() {
  SplitMix64 rng(801);
  ConceptGraph g;
  const int n = 1000;
  // Ring through all nodes guarantees cycles and reachability; random
  // chords add shortcuts and extra cycles.
  for (int i = 0; i < n; i++) {
    g.add_edge("n" + std::to_string(i), "n" + std::to_string((i + 1) % n));
  }
  for (int e = 0; e < 3000; e++) {
    auto a = "n" + std::to_string(rng.below(n));
    auto b = "n" + std::to_string(rng.below(n));
    if (a != b) g.add_edge(a, b);
  }
  EXPECT(g.node_count() == 1000);

  TraversalStats stats;
  SubgraphView view = extract_subgraph(g, "n0", std::nullopt, &stats);
  EXPECT(stats.nodes_visited == 1000);  // ring reaches every node
  for (const auto& [node, count] : stats.visit_counts) EXPECT(count == 1);
  for (const auto& [node, role] : view.roles) EXPECT(g.has_node(node));
}

struct Criterion {
  int number;
  const char* name;
  void (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "formula fidelity (hard/soft constraints on 1000 random tally sets)",
       criterion_formula_fidelity},
      {2, "counting oracle (10k-record corpus, permutation/duplication invariance)",
       criterion_counting_oracle},
      {3, "planted-taxonomy recovery (clean and 20% inversion)", criterion_planted_recovery},
      {4, "Porter conformance (published vocabulary, exact)", criterion_porter_conformance},
      {5, "baseline failure case (sparse co-occurrence vs explicit relations)",
       criterion_baseline_failure_case},
      {6, "pruning behavior (star hub ratio 43801.0, top-k discard)",
       criterion_pruning_behavior},
      {7, "determinism (byte-identical artifacts and reports)", criterion_determinism},
      {8, "cycle safety (1000-node cyclic graph traversal)", criterion_cycle_safety},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      criterion.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.number, criterion.name, seconds_since(start),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) failures++;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}

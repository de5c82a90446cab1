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

// folkso: aggregates per-user collection/set hierarchies into a common
// concept graph, with a co-occurrence subsumption baseline and a
// synthetic corpus generator for evaluation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "folkso/baseline.hpp"
#include "folkso/corpus.hpp"
#include "folkso/errors.hpp"
#include "folkso/pipeline.hpp"
#include "folkso/synth.hpp"

namespace {

using folkso::PipelineConfig;

// JSON config supplies defaults; command-line flags override.
PipelineConfig preload_config(int argc, char** argv) {
  for (int i = 1; i < argc - 1; i++) {
    std::string arg = argv[i];
    if (arg == "--config") return PipelineConfig::from_json_file(argv[i + 1]);
  }
  return PipelineConfig{};
}

struct PipelineFlags {
  std::string constraint;
  std::string format;

  void attach(CLI::App* sub, PipelineConfig& cfg) {
    constraint = folkso::to_string(cfg.constraint);
    format = cfg.format == folkso::InputFormat::jsonl ? "jsonl" : "tsv";
    sub->add_option("--constraint", constraint, "Conflict constraint: hard or soft")
        ->capture_default_str();
    sub->add_option("--top-k", cfg.top_k, "Highest-ratio concepts to discard")
        ->capture_default_str();
    sub->add_option("--epsilon", cfg.epsilon, "Degree-ratio smoothing (plain decimal)")
        ->capture_default_str();
    sub->add_option("--stoplist", cfg.stoplist_path, "Stoplist file (one word per line)");
    sub->add_option("--format", format, "Input format: jsonl or tsv")
        ->capture_default_str();
    sub->add_option("--output-dir", cfg.output_dir, "Directory for artifacts")
        ->capture_default_str();
  }

  void apply(PipelineConfig& cfg) const {
    cfg.constraint = folkso::parse_constraint(constraint);
    cfg.format = folkso::parse_input_format(format);
  }
};

}  // namespace

int main(int argc, char** argv) {
  try {
    PipelineConfig cfg = preload_config(argc, argv);

    CLI::App app{"folkso: folksonomy induction from user collection/set hierarchies"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file with pipeline defaults");

    std::string input;
    std::string graph_path;
    std::string query_concept;
    std::string synth_spec_path;
    std::string synth_output;
    std::string taxonomy_out;
    int max_depth = 0;

    auto* build = app.add_subcommand("build", "Run the full pipeline and persist artifacts");
    PipelineFlags build_flags;
    build->add_option("--input", input, "Corpus file")->required();
    build_flags.attach(build, cfg);

    auto* extract = app.add_subcommand("extract", "Export the subgraph around one concept");
    extract->add_option("--graph", graph_path, "graph.tsv or graph.graphml from a build")
        ->required();
    extract->add_option("--concept", query_concept, "Concept to extract (normalized like a name)")
        ->required();
    extract->add_option("--max-depth", max_depth, "Traversal depth cap (default unlimited)");
    extract->add_option("--output-dir", cfg.output_dir, "Directory for artifacts")
        ->capture_default_str();

    auto* baseline = app.add_subcommand(
        "baseline", "Run the co-occurrence subsumption baseline and diff against the pipeline");
    PipelineFlags baseline_flags;
    baseline->add_option("--input", input, "Corpus file")->required();
    baseline->add_option("--threshold", cfg.baseline_threshold, "Subsumption threshold")
        ->capture_default_str();
    baseline->add_option("--min-support", cfg.baseline_min_support,
                         "Minimum document frequency for candidate terms")
        ->capture_default_str();
    baseline_flags.attach(baseline, cfg);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted truth");
    synth->add_option("--spec", synth_spec_path, "Synth spec JSON")->required();
    synth->add_option("--output", synth_output, "Corpus JSONL to write")->required();
    synth->add_option("--taxonomy-out", taxonomy_out, "Also write the planted edges as TSV");

    auto* stats = app.add_subcommand("stats", "Print corpus summary counts");
    std::string stats_format = "jsonl";
    stats->add_option("--input", input, "Corpus file")->required();
    stats->add_option("--format", stats_format, "Input format: jsonl or tsv")
        ->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }

    if (build->parsed()) {
      build_flags.apply(cfg);
      auto report = folkso::run_build(input, cfg, &std::cerr);
      std::cout << report.to_json();
      report.print_summary(std::cerr);
    } else if (extract->parsed()) {
      if (extract->count("--max-depth")) cfg.max_depth = max_depth;
      auto report = folkso::run_extract(graph_path, query_concept, cfg);
      std::cout << report.to_json();
      std::cerr << "extract: '" << report.focus << "' with " << report.parents
                << " parents, " << report.children << " children, "
                << report.descendants << " descendants\n";
    } else if (baseline->parsed()) {
      baseline_flags.apply(cfg);
      auto report = folkso::run_baseline(input, cfg, &std::cerr);
      std::cout << report.to_json();
      report.print_summary(std::cerr);
    } else if (synth->parsed()) {
      auto spec = folkso::SynthSpec::from_json_file(synth_spec_path);
      folkso::Corpus corpus = folkso::generate(spec);
      std::ofstream out(synth_output, std::ios::binary);
      if (!out) throw folkso::InputError("cannot write corpus: " + synth_output);
      folkso::write_corpus_jsonl(out, corpus);
      if (!taxonomy_out.empty()) {
        std::ofstream tax(taxonomy_out, std::ios::binary);
        if (!tax) throw folkso::InputError("cannot write taxonomy: " + taxonomy_out);
        for (const auto& rel : spec.taxonomy) {
          tax << rel.broader << '\t' << rel.narrower << '\n';
        }
      }
      nlohmann::ordered_json doc;
      doc["records"] = corpus.record_count;
      doc["users"] = corpus.user_count;
      doc["output"] = synth_output;
      std::cout << doc.dump(2) << "\n";
      std::cerr << "synth: wrote " << corpus.record_count << " records for "
                << corpus.user_count << " users\n";
    } else if (stats->parsed()) {
      folkso::LoadReport load_report;
      auto corpus = folkso::load_corpus(input, folkso::parse_input_format(stats_format),
                                        &load_report);
      load_report.print(std::cerr);
      auto s = folkso::corpus_stats(corpus);
      nlohmann::ordered_json doc;
      doc["records"] = s.records;
      doc["users"] = s.users;
      doc["collections"] = s.collections;
      doc["sets"] = s.sets;
      std::cout << doc.dump(2) << "\n";
    }
    return 0;
  } catch (const folkso::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const folkso::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

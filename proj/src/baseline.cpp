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

#include "folkso/baseline.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "folkso/errors.hpp"

namespace folkso {
namespace {

void count_into(CooccurrenceStats& stats, const TermDocument& doc) {
  for (std::size_t i = 0; i < doc.terms.size(); i++) {
    stats.freq[doc.terms[i]]++;
    for (std::size_t j = i + 1; j < doc.terms.size(); j++) {
      stats.co[{doc.terms[i], doc.terms[j]}]++;  // terms are sorted, so i < j
    }
  }
}

void merge_into(CooccurrenceStats& into, const CooccurrenceStats& from) {
  for (const auto& [term, n] : from.freq) into.freq[term] += n;
  for (const auto& [pair, n] : from.co) into.co[pair] += n;
}

}  // namespace

int CooccurrenceStats::frequency(const Term& t) const {
  auto it = freq.find(t);
  if (it == freq.end()) throw InputError("term absent from co-occurrence stats: " + t);
  return it->second;
}

int CooccurrenceStats::cooccurrence(const Term& a, const Term& b) const {
  auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  auto it = co.find(key);
  return it == co.end() ? 0 : it->second;
}

std::vector<TermDocument> build_documents(const Corpus& corpus, const NormalizerConfig& cfg) {
  std::vector<TermDocument> docs;
  docs.reserve(corpus.records.size());
  for (std::size_t i = 0; i < corpus.records.size(); i++) {
    const auto& rec = corpus.records[i];
    std::vector<Term> terms = normalize_name(rec.collection_name, cfg);
    for (auto& t : normalize_name(rec.set_name, cfg)) {
      terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty()) continue;
    docs.push_back({std::to_string(i), std::move(terms)});
  }
  return docs;
}

CooccurrenceStats count_cooccurrence(std::span<const TermDocument> docs) {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  std::vector<CooccurrenceStats> parts(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(docs.size()); i++) {
      count_into(local, docs[static_cast<std::size_t>(i)]);
    }
  }
  CooccurrenceStats stats;
  for (const auto& part : parts) merge_into(stats, part);
  return stats;
#else
  return count_cooccurrence_serial(docs);
#endif
}

CooccurrenceStats count_cooccurrence_serial(std::span<const TermDocument> docs) {
  CooccurrenceStats stats;
  for (const auto& doc : docs) count_into(stats, doc);
  return stats;
}

bool subsumes(const Term& x, const Term& y, const CooccurrenceStats& stats,
              double threshold) {
  int fx = stats.frequency(x);
  int fy = stats.frequency(y);
  if (x == y) return false;
  int joint = stats.cooccurrence(x, y);
  double p_x_given_y = static_cast<double>(joint) / static_cast<double>(fy);
  double p_y_given_x = static_cast<double>(joint) / static_cast<double>(fx);
  return p_x_given_y >= threshold && p_y_given_x < threshold;
}

std::vector<Relation> induce_baseline_hierarchy(std::span<const TermDocument> docs,
                                                double threshold, int min_support) {
  if (threshold <= 0.0 || threshold > 1.0) {
    throw ConfigError("subsumption threshold must be in (0, 1]");
  }
  CooccurrenceStats stats = count_cooccurrence(docs);
  std::vector<Relation> edges;
  // Only co-occurring pairs can pass the P(x|y) >= threshold clause.
  for (const auto& [pair, joint] : stats.co) {
    const auto& [a, b] = pair;
    if (stats.freq.at(a) < min_support || stats.freq.at(b) < min_support) continue;
    if (subsumes(a, b, stats, threshold)) edges.push_back({a, b});
    if (subsumes(b, a, stats, threshold)) edges.push_back({b, a});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace folkso

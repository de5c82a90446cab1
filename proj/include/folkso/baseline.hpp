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

#ifndef FOLKSO_BASELINE_HPP
#define FOLKSO_BASELINE_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folkso/aggregate.hpp"
#include "folkso/corpus.hpp"
#include "folkso/normalize.hpp"

namespace folkso {

/// One record's bag of concepts: the union of its normalized collection
/// and set terms. Terms are sorted and unique.
struct TermDocument {
  std::string doc_id;
  std::vector<Term> terms;
};

/// Document frequencies and unordered-pair co-occurrence counts; the
/// inputs to the co-occurrence subsumption test.
struct CooccurrenceStats {
  std::map<Term, int> freq;
  /// Keyed by (min, max) of the pair.
  std::map<std::pair<Term, Term>, int> co;

  int frequency(const Term& t) const;
  int cooccurrence(const Term& a, const Term& b) const;
  bool operator==(const CooccurrenceStats&) const = default;
};

/// One document per record; records whose names normalize to nothing
/// are dropped.
std::vector<TermDocument> build_documents(const Corpus& corpus, const NormalizerConfig& cfg);

/// Counts document frequency per term and joint frequency per pair.
/// Parallelized over document partitions (OpenMP) with a commutative
/// merge; identical to the serial reference.
CooccurrenceStats count_cooccurrence(std::span<const TermDocument> docs);

/// Serial reference implementation kept for testing and benchmarking.
CooccurrenceStats count_cooccurrence_serial(std::span<const TermDocument> docs);

/// Co-occurrence subsumption: x subsumes y when P(x|y) >= threshold
/// while P(y|x) < threshold. Throws InputError when either term is
/// absent from the stats.
bool subsumes(const Term& x, const Term& y, const CooccurrenceStats& stats,
              double threshold);

/// All subsumption edges x -> y over terms with document frequency at
/// least min_support. Result sorted by (broader, narrower).
std::vector<Relation> induce_baseline_hierarchy(std::span<const TermDocument> docs,
                                                double threshold, int min_support = 2);

}  // namespace folkso

#endif  // FOLKSO_BASELINE_HPP

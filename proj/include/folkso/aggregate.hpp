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

#ifndef FOLKSO_AGGREGATE_HPP
#define FOLKSO_AGGREGATE_HPP

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "folkso/corpus.hpp"
#include "folkso/normalize.hpp"

namespace folkso {

/// A directed broader -> narrower assertion between two concepts.
struct Relation {
  Term broader;
  Term narrower;

  auto operator<=>(const Relation&) const = default;
};

/// Distinct-user support for one directed relation. A user asserting
/// the same pair through many records counts once.
struct RelationTally {
  Term broader;
  Term narrower;
  int user_support = 0;

  bool operator==(const RelationTally&) const = default;
};

enum class Constraint { hard, soft };

Constraint parse_constraint(const std::string& name);
std::string to_string(Constraint c);

/// Relations retained after conflict resolution. Under the soft
/// constraint, equal forward/reverse support keeps both directions;
/// such pairs are flagged in symmetric_ties so consumers can drop them.
struct RelationSet {
  Constraint constraint = Constraint::soft;
  std::vector<Relation> relations;  // sorted by (broader, narrower)
  std::set<Relation> symmetric_ties;
};

/// The collection -> set relation delegated to every (collection term,
/// set term) pair, self-pairs excluded. Order follows the first
/// occurrence of terms in each name.
std::vector<Relation> delegate_relations(const RawRecord& rec, const NormalizerConfig& cfg);

/// Counts, for every delegated pair, the number of distinct users
/// asserting it. Parallelized over records (OpenMP) with a sort-merge;
/// output is sorted by (broader, narrower) and identical to the serial
/// reference.
std::vector<RelationTally> tally_users(const Corpus& corpus, const NormalizerConfig& cfg);

/// Serial reference implementation of tally_users, kept for testing
/// and benchmarking the parallel kernel against.
std::vector<RelationTally> tally_users_serial(const Corpus& corpus, const NormalizerConfig& cfg);

/// Keeps x -> y when more than one user asserts it and the reverse
/// support stays within the constraint: at most 1 disagreeing user
/// (hard), or no more than the forward support (soft).
RelationSet resolve_conflicts(std::span<const RelationTally> tallies, Constraint constraint);

/// Tally export, sorted by support descending then lexicographic.
/// Columns: broader, narrower, user_support.
void write_tallies_tsv(std::ostream& out, std::span<const RelationTally> tallies);

}  // namespace folkso

#endif  // FOLKSO_AGGREGATE_HPP

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

#include "folkso/aggregate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "folkso/errors.hpp"

namespace folkso {
namespace {

// (user index, relation) assertion; duplicates collapse in the
// sort-unique pass, which is what makes support distinct-user.
struct Assertion {
  std::uint32_t user;
  Relation relation;

  auto operator<=>(const Assertion&) const = default;
};

std::vector<std::uint32_t> user_indices(const Corpus& corpus) {
  std::unordered_map<std::string_view, std::uint32_t> index;
  index.reserve(corpus.user_count * 2);
  std::vector<std::uint32_t> of_record;
  of_record.reserve(corpus.records.size());
  for (const auto& rec : corpus.records) {
    auto [it, _] = index.try_emplace(rec.user_id, static_cast<std::uint32_t>(index.size()));
    of_record.push_back(it->second);
  }
  return of_record;
}

std::vector<RelationTally> count_assertions(std::vector<Assertion> assertions) {
  std::sort(assertions.begin(), assertions.end(),
            [](const Assertion& a, const Assertion& b) {
              return std::tie(a.relation, a.user) < std::tie(b.relation, b.user);
            });
  assertions.erase(std::unique(assertions.begin(), assertions.end()), assertions.end());

  std::vector<RelationTally> tallies;
  for (std::size_t i = 0; i < assertions.size();) {
    std::size_t j = i;
    while (j < assertions.size() && assertions[j].relation == assertions[i].relation) j++;
    tallies.push_back({assertions[i].relation.broader, assertions[i].relation.narrower,
                       static_cast<int>(j - i)});
    i = j;
  }
  return tallies;
}

}  // namespace

Constraint parse_constraint(const std::string& name) {
  if (name == "hard") return Constraint::hard;
  if (name == "soft") return Constraint::soft;
  throw ConfigError("unknown constraint: " + name + " (expected hard or soft)");
}

std::string to_string(Constraint c) {
  return c == Constraint::hard ? "hard" : "soft";
}

std::vector<Relation> delegate_relations(const RawRecord& rec, const NormalizerConfig& cfg) {
  std::vector<Term> broader = normalize_name(rec.collection_name, cfg);
  std::vector<Term> narrower = normalize_name(rec.set_name, cfg);
  std::vector<Relation> relations;
  relations.reserve(broader.size() * narrower.size());
  for (const auto& c : broader) {
    for (const auto& s : narrower) {
      if (c != s) relations.push_back({c, s});
    }
  }
  return relations;
}

std::vector<RelationTally> tally_users(const Corpus& corpus, const NormalizerConfig& cfg) {
  const std::vector<std::uint32_t> user_of = user_indices(corpus);
  const auto n = static_cast<std::int64_t>(corpus.records.size());

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::vector<std::vector<Assertion>> parts(static_cast<std::size_t>(threads));

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
  {
#ifdef _OPENMP
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& local = parts[0];
#endif
    // Names repeat heavily across records; memoize per thread.
    std::unordered_map<std::string, std::vector<Term>> cache;
    auto normalized = [&](const std::string& name) -> const std::vector<Term>& {
      auto it = cache.find(name);
      if (it == cache.end()) it = cache.emplace(name, normalize_name(name, cfg)).first;
      return it->second;
    };
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 256) nowait
#endif
    for (std::int64_t i = 0; i < n; i++) {
      const auto& rec = corpus.records[static_cast<std::size_t>(i)];
      const auto& broader = normalized(rec.collection_name);
      const auto& narrower = normalized(rec.set_name);
      for (const auto& c : broader) {
        for (const auto& s : narrower) {
          if (c != s) local.push_back({user_of[static_cast<std::size_t>(i)], {c, s}});
        }
      }
    }
  }

  std::vector<Assertion> merged;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  merged.reserve(total);
  for (auto& part : parts) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return count_assertions(std::move(merged));
}

std::vector<RelationTally> tally_users_serial(const Corpus& corpus,
                                              const NormalizerConfig& cfg) {
  std::vector<std::uint32_t> user_of = user_indices(corpus);
  std::vector<Assertion> assertions;
  for (std::size_t i = 0; i < corpus.records.size(); i++) {
    for (const auto& rel : delegate_relations(corpus.records[i], cfg)) {
      assertions.push_back({user_of[i], rel});
    }
  }
  return count_assertions(std::move(assertions));
}

RelationSet resolve_conflicts(std::span<const RelationTally> tallies, Constraint constraint) {
  std::map<Relation, int> support;
  for (const auto& t : tallies) {
    support[{t.broader, t.narrower}] = t.user_support;
  }
  auto support_of = [&](const Relation& r) {
    auto it = support.find(r);
    return it == support.end() ? 0 : it->second;
  };

  RelationSet out;
  out.constraint = constraint;
  for (const auto& [rel, forward] : support) {
    if (forward <= 1) continue;
    int reverse = support_of({rel.narrower, rel.broader});
    bool keep = constraint == Constraint::hard ? reverse <= 1 : reverse <= forward;
    if (!keep) continue;
    out.relations.push_back(rel);
    if (constraint == Constraint::soft && reverse == forward) {
      out.symmetric_ties.insert(rel);
    }
  }
  return out;
}

void write_tallies_tsv(std::ostream& out, std::span<const RelationTally> tallies) {
  std::vector<RelationTally> sorted(tallies.begin(), tallies.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const RelationTally& a, const RelationTally& b) {
              return std::tie(b.user_support, a.broader, a.narrower) <
                     std::tie(a.user_support, b.broader, b.narrower);
            });
  for (const auto& t : sorted) {
    out << t.broader << '\t' << t.narrower << '\t' << t.user_support << '\n';
  }
}

}  // namespace folkso

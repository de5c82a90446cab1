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

#ifndef FOLKSO_CORPUS_HPP
#define FOLKSO_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace folkso {

/// One (user, collection name, set name) observation. The collection is
/// the broader container; the set is the album nested inside it.
struct RawRecord {
  std::string user_id;
  std::string collection_name;
  std::string set_name;

  bool operator==(const RawRecord&) const = default;
};

/// Deduplicated record sequence. Immutable by convention after
/// construction; safe to share read-only across threads.
struct Corpus {
  std::vector<RawRecord> records;
  std::size_t user_count = 0;
  std::size_t record_count = 0;

  /// Removes byte-identical triples (keeping first-seen order) and
  /// fills the counts.
  static Corpus from_records(std::vector<RawRecord> recs);
};

enum class InputFormat { jsonl, tsv };

/// Per-load tally of what was read, rejected and deduplicated.
struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t records_accepted = 0;
  std::size_t rejected_empty_field = 0;
  std::size_t duplicates_removed = 0;

  void print(std::ostream& out) const;
};

/// Loads a corpus file.
///
/// JSONL lines look like {"user": "u1", "collection": "Travel", "set":
/// "China"}; TSV lines are the same three columns tab-separated, no
/// header. Blank lines are skipped. A line that does not parse raises
/// InputError naming the line number; records with an empty user or a
/// name that is empty after trimming are rejected and counted in the
/// report. Exact duplicate triples are removed, keeping first-seen
/// order.
Corpus load_corpus(const std::string& path, InputFormat format,
                   LoadReport* report = nullptr);

/// Writes records back out as JSONL in the schema load_corpus reads.
void write_corpus_jsonl(std::ostream& out, const Corpus& corpus);

struct CorpusStats {
  std::size_t records = 0;
  std::size_t users = 0;
  std::size_t collections = 0;  // distinct raw collection names
  std::size_t sets = 0;         // distinct raw set names
};

CorpusStats corpus_stats(const Corpus& corpus);

InputFormat parse_input_format(const std::string& name);

}  // namespace folkso

#endif  // FOLKSO_CORPUS_HPP

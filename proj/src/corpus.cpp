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

#include "folkso/corpus.hpp"

#include <fstream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "folkso/errors.hpp"

namespace folkso {
namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string_view trim_ws(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (b < e && space(s[b])) b++;
  while (e > b && space(s[e - 1])) e--;
  return s.substr(b, e - b);
}

// Key for exact-duplicate detection; 0x1f never occurs in a text field.
std::string dedup_key(const RawRecord& r) {
  std::string key;
  key.reserve(r.user_id.size() + r.collection_name.size() + r.set_name.size() + 2);
  key += r.user_id;
  key += '\x1f';
  key += r.collection_name;
  key += '\x1f';
  key += r.set_name;
  return key;
}

RawRecord parse_jsonl_line(const std::string& line, const std::string& path,
                           std::size_t line_no) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ":" + std::to_string(line_no) +
                     ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw InputError(path + ":" + std::to_string(line_no) +
                     ": expected a JSON object");
  }
  RawRecord rec;
  for (auto [field, target] : {std::pair<const char*, std::string*>{"user", &rec.user_id},
                               {"collection", &rec.collection_name},
                               {"set", &rec.set_name}}) {
    auto it = doc.find(field);
    if (it == doc.end() || !it->is_string()) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": missing or non-string field \"" + field + "\"");
    }
    *target = it->get<std::string>();
  }
  return rec;
}

RawRecord parse_tsv_line(const std::string& line, const std::string& path,
                         std::size_t line_no) {
  std::size_t t1 = line.find('\t');
  std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
  std::size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
  if (t1 == std::string::npos || t2 == std::string::npos || t3 != std::string::npos) {
    throw InputError(path + ":" + std::to_string(line_no) +
                     ": expected exactly 3 tab-separated columns");
  }
  std::string set_field = line.substr(t2 + 1);
  if (!set_field.empty() && set_field.back() == '\r') set_field.pop_back();
  return RawRecord{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
                   std::move(set_field)};
}

}  // namespace

Corpus Corpus::from_records(std::vector<RawRecord> recs) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::unordered_set<std::string> users;
  seen.reserve(recs.size() * 2);
  for (auto& rec : recs) {
    if (!seen.insert(dedup_key(rec)).second) continue;
    users.insert(rec.user_id);
    corpus.records.push_back(std::move(rec));
  }
  corpus.record_count = corpus.records.size();
  corpus.user_count = users.size();
  return corpus;
}

Corpus load_corpus(const std::string& path, InputFormat format, LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open corpus file: " + path);

  LoadReport local;
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (is_blank(line)) continue;
    local.lines_read++;
    RawRecord rec = format == InputFormat::jsonl
                        ? parse_jsonl_line(line, path, line_no)
                        : parse_tsv_line(line, path, line_no);
    if (rec.user_id.empty() || trim_ws(rec.collection_name).empty() ||
        trim_ws(rec.set_name).empty()) {
      local.rejected_empty_field++;
      continue;
    }
    records.push_back(std::move(rec));
  }

  Corpus corpus = Corpus::from_records(std::move(records));
  local.records_accepted = corpus.record_count;
  local.duplicates_removed = local.lines_read - local.rejected_empty_field -
                             local.records_accepted;
  if (report) *report = local;
  return corpus;
}

void LoadReport::print(std::ostream& out) const {
  out << "load report: " << lines_read << " lines read, " << records_accepted
      << " records accepted, " << rejected_empty_field
      << " rejected (empty field), " << duplicates_removed
      << " exact duplicates removed\n";
}

void write_corpus_jsonl(std::ostream& out, const Corpus& corpus) {
  for (const auto& rec : corpus.records) {
    nlohmann::ordered_json doc;
    doc["user"] = rec.user_id;
    doc["collection"] = rec.collection_name;
    doc["set"] = rec.set_name;
    out << doc.dump() << '\n';
  }
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.records = corpus.record_count;
  stats.users = corpus.user_count;
  std::unordered_set<std::string> collections;
  std::unordered_set<std::string> sets;
  for (const auto& rec : corpus.records) {
    collections.insert(rec.collection_name);
    sets.insert(rec.set_name);
  }
  stats.collections = collections.size();
  stats.sets = sets.size();
  return stats;
}

InputFormat parse_input_format(const std::string& name) {
  if (name == "jsonl") return InputFormat::jsonl;
  if (name == "tsv") return InputFormat::tsv;
  throw ConfigError("unknown input format: " + name + " (expected jsonl or tsv)");
}

}  // namespace folkso

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

#include <sstream>

#include <doctest.h>

#include "folkso/errors.hpp"
#include "test_support.hpp"

using namespace folkso;

TEST_CASE("load_corpus removes exact duplicates and counts users") {
  test::TempDir dir;
  auto path = dir.write_file(
      "c.jsonl",
      R"({"user":"u1","collection":"Travel","set":"China"})" "\n"
      R"({"user":"u1","collection":"Travel","set":"China"})" "\n");
  LoadReport report;
  Corpus c = load_corpus(path.string(), InputFormat::jsonl, &report);
  CHECK(c.record_count == 1);
  CHECK(c.user_count == 1);
  CHECK(report.duplicates_removed == 1);
  CHECK(report.records_accepted == 1);
}

TEST_CASE("load_corpus on an empty file") {
  test::TempDir dir;
  auto path = dir.write_file("empty.jsonl", "");
  Corpus c = load_corpus(path.string(), InputFormat::jsonl);
  CHECK(c.record_count == 0);
  CHECK(c.user_count == 0);
}

TEST_CASE("load_corpus counts distinct users") {
  test::TempDir dir;
  auto path = dir.write_file(
      "c.jsonl",
      R"({"user":"u1","collection":"Travel","set":"China"})" "\n"
      R"({"user":"u2","collection":"Travel","set":"Japan"})" "\n");
  Corpus c = load_corpus(path.string(), InputFormat::jsonl);
  CHECK(c.record_count == 2);
  CHECK(c.user_count == 2);
}

TEST_CASE("tsv format parses three columns") {
  test::TempDir dir;
  auto path = dir.write_file("c.tsv", "u1\tTravel\tChina\nu2\tNature\tBirds\n");
  Corpus c = load_corpus(path.string(), InputFormat::tsv);
  CHECK(c.record_count == 2);
  CHECK(c.records[0] == RawRecord{"u1", "Travel", "China"});
  CHECK(c.records[1] == RawRecord{"u2", "Nature", "Birds"});
}

TEST_CASE("malformed lines report the line number") {
  test::TempDir dir;
  auto jsonl = dir.write_file("bad.jsonl", "{\"user\":\"u1\"}\n");
  CHECK_THROWS_WITH_AS(load_corpus(jsonl.string(), InputFormat::jsonl),
                       doctest::Contains(":1:"), InputError);

  auto broken = dir.write_file("broken.jsonl",
                               R"({"user":"u1","collection":"A","set":"B"})" "\nnot json\n");
  CHECK_THROWS_WITH_AS(load_corpus(broken.string(), InputFormat::jsonl),
                       doctest::Contains(":2:"), InputError);

  auto tsv = dir.write_file("bad.tsv", "u1\tonly two\n");
  CHECK_THROWS_AS(load_corpus(tsv.string(), InputFormat::tsv), InputError);

  auto wide = dir.write_file("wide.tsv", "u1\ta\tb\tc\n");
  CHECK_THROWS_AS(load_corpus(wide.string(), InputFormat::tsv), InputError);
}

TEST_CASE("records with empty fields are rejected and tallied") {
  test::TempDir dir;
  auto path = dir.write_file(
      "c.jsonl",
      R"({"user":"","collection":"Travel","set":"China"})" "\n"
      R"({"user":"u1","collection":"  ","set":"China"})" "\n"
      R"({"user":"u1","collection":"Travel","set":""})" "\n"
      R"({"user":"u1","collection":"Travel","set":"China"})" "\n");
  LoadReport report;
  Corpus c = load_corpus(path.string(), InputFormat::jsonl, &report);
  CHECK(c.record_count == 1);
  CHECK(report.rejected_empty_field == 3);
  std::ostringstream text;
  report.print(text);
  CHECK(text.str().find("3 rejected") != std::string::npos);
}

TEST_CASE("missing file raises InputError") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/nope.jsonl", InputFormat::jsonl), InputError);
}

TEST_CASE("loading a file concatenated with itself equals loading it once") {
  test::TempDir dir;
  std::string body =
      R"({"user":"u1","collection":"Travel","set":"China"})" "\n"
      R"({"user":"u2","collection":"Nature","set":"Birds & Bees"})" "\n";
  auto once = dir.write_file("once.jsonl", body);
  auto twice = dir.write_file("twice.jsonl", body + body);
  Corpus a = load_corpus(once.string(), InputFormat::jsonl);
  Corpus b = load_corpus(twice.string(), InputFormat::jsonl);
  CHECK(a.records == b.records);
  CHECK(a.user_count == b.user_count);
}

TEST_CASE("load_corpus is deterministic") {
  test::TempDir dir;
  auto path = dir.write_file(
      "c.jsonl",
      R"({"user":"u1","collection":"A","set":"B"})" "\n"
      R"({"user":"u2","collection":"C","set":"D"})" "\n");
  Corpus a = load_corpus(path.string(), InputFormat::jsonl);
  Corpus b = load_corpus(path.string(), InputFormat::jsonl);
  CHECK(a.records == b.records);
}

TEST_CASE("jsonl round trip") {
  Corpus c = Corpus::from_records({{"u1", "Travel \"quoted\"", "China"},
                                   {"u2", "Natur\xc3\xa9", "V\xc3\xb6gel"}});
  std::ostringstream out;
  write_corpus_jsonl(out, c);
  test::TempDir dir;
  auto path = dir.write_file("rt.jsonl", out.str());
  Corpus back = load_corpus(path.string(), InputFormat::jsonl);
  CHECK(back.records == c.records);
}

TEST_CASE("corpus_stats counts records, users and distinct raw names") {
  Corpus two = Corpus::from_records({{"u1", "Travel", "China"}, {"u2", "Travel", "Japan"}});
  CorpusStats s = corpus_stats(two);
  CHECK(s.records == 2);
  CHECK(s.users == 2);
  CHECK(s.collections == 1);
  CHECK(s.sets == 2);

  CorpusStats empty = corpus_stats(Corpus{});
  CHECK(empty.records == 0);
  CHECK(empty.users == 0);
  CHECK(empty.collections == 0);
  CHECK(empty.sets == 0);

  Corpus one_user = Corpus::from_records(
      {{"u1", "Pets", "Cats"}, {"u1", "Pets", "Dogs"}, {"u1", "Pets", "Birds"}});
  CorpusStats s3 = corpus_stats(one_user);
  CHECK(s3.records == 3);
  CHECK(s3.users == 1);
  CHECK(s3.collections == 1);
  CHECK(s3.sets == 3);
}

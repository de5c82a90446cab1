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

#include "folkso/synth.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "folkso/errors.hpp"

namespace folkso {
namespace {

constexpr std::uint64_t kJunkPool = 10000;

std::string junk_term(std::uint64_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "junk%04llu", static_cast<unsigned long long>(index));
  return buf;
}

std::string user_id(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "u%05d", index + 1);
  return buf;
}

// Exercises case normalization without disturbing the term mapping.
std::string decorate(const Term& term, SplitMix64& rng) {
  std::string name = term;
  if (!name.empty() && rng.next_double() < 0.5) {
    char c = name[0];
    if (c >= 'a' && c <= 'z') name[0] = static_cast<char>(c - 0x20);
  }
  return name;
}

}  // namespace

void SynthSpec::validate() const {
  if (taxonomy.empty()) throw ConfigError("synth taxonomy must be non-empty");
  if (users < 1) throw ConfigError("synth users must be positive");
  if (records_per_user < 1) throw ConfigError("synth records_per_user must be positive");
  if (inversion_rate < 0.0 || inversion_rate >= 1.0) {
    throw ConfigError("inversion_rate must be in [0, 1)");
  }
  if (idiosyncrasy_rate < 0.0 || idiosyncrasy_rate >= 1.0) {
    throw ConfigError("idiosyncrasy_rate must be in [0, 1)");
  }
  if (inversion_rate + idiosyncrasy_rate >= 1.0) {
    throw ConfigError("inversion_rate + idiosyncrasy_rate must stay below 1");
  }
  for (const auto& rel : taxonomy) {
    if (rel.broader == rel.narrower) {
      throw ConfigError("planted taxonomy may not contain self-pairs: " + rel.broader);
    }
  }
}

SynthSpec SynthSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open synth spec: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  SynthSpec spec;
  try {
    for (const auto& pair : doc.at("taxonomy")) {
      spec.taxonomy.push_back({pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
    }
    spec.users = doc.at("users").get<int>();
    spec.records_per_user = doc.at("records_per_user").get<int>();
    spec.inversion_rate = doc.value("inversion_rate", 0.0);
    spec.idiosyncrasy_rate = doc.value("idiosyncrasy_rate", 0.0);
    spec.seed = doc.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": invalid synth spec: " + e.what());
  }
  return spec;
}

Corpus generate(const SynthSpec& spec, const NormalizerConfig& cfg) {
  spec.validate();
  for (const auto& rel : spec.taxonomy) {
    for (const auto& term : {rel.broader, rel.narrower}) {
      auto round_trip = normalize_name(term, cfg);
      if (round_trip.size() != 1 || round_trip[0] != term) {
        throw ConfigError("planted term is not a normalization fixed point: '" + term + "'");
      }
    }
  }

  SplitMix64 rng(spec.seed);
  std::vector<RawRecord> records;
  records.reserve(static_cast<std::size_t>(spec.users) *
                  static_cast<std::size_t>(spec.records_per_user));
  for (int u = 0; u < spec.users; u++) {
    std::string uid = user_id(u);
    for (int r = 0; r < spec.records_per_user; r++) {
      double roll = rng.next_double();
      Term broader;
      Term narrower;
      if (roll < spec.idiosyncrasy_rate) {
        std::uint64_t a = rng.below(kJunkPool);
        std::uint64_t b = rng.below(kJunkPool - 1);
        if (b >= a) b++;
        broader = junk_term(a);
        narrower = junk_term(b);
      } else {
        const auto& edge = spec.taxonomy[rng.below(spec.taxonomy.size())];
        bool inverted = roll < spec.idiosyncrasy_rate + spec.inversion_rate;
        broader = inverted ? edge.narrower : edge.broader;
        narrower = inverted ? edge.broader : edge.narrower;
      }
      records.push_back({uid, decorate(broader, rng), decorate(narrower, rng)});
    }
  }
  return Corpus::from_records(std::move(records));
}

}  // namespace folkso

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

#ifndef FOLKSO_SYNTH_HPP
#define FOLKSO_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "folkso/aggregate.hpp"
#include "folkso/corpus.hpp"
#include "folkso/normalize.hpp"

namespace folkso {

/// splitmix64: a fixed 64-bit mix generator, so identical seeds
/// reproduce identical corpora on every platform and compiler.
/// (Standard-library distributions are implementation-defined and
/// would break that guarantee.)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n). Modulo bias is irrelevant at our pool sizes and
  /// keeps the draw sequence trivially portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Recipe for a synthetic corpus with a planted ground-truth taxonomy.
struct SynthSpec {
  std::vector<Relation> taxonomy;  // planted truth
  int users = 0;
  int records_per_user = 0;
  /// Probability a sampled relation is emitted reversed.
  double inversion_rate = 0.0;
  /// Probability a record becomes a random junk pair instead.
  double idiosyncrasy_rate = 0.0;
  std::uint64_t seed = 0;

  static SynthSpec from_json_file(const std::string& path);
  void validate() const;  // throws ConfigError
};

/// Deterministically generates a corpus from the spec. Every planted
/// term must already be a normalization fixed point (lowercase,
/// stemmed) so the pipeline maps the emitted names back onto it; junk
/// records draw from the reserved "junkNNNN" namespace which never
/// collides with planted terms.
Corpus generate(const SynthSpec& spec, const NormalizerConfig& cfg = NormalizerConfig{});

}  // namespace folkso

#endif  // FOLKSO_SYNTH_HPP

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

// Benchmarks the OpenMP tally and co-occurrence kernels against their
// serial references on a synthetic corpus, verifying equal output.
//
//   folkso_bench [users] [records_per_user] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "folkso/aggregate.hpp"
#include "folkso/baseline.hpp"
#include "folkso/synth.hpp"

using namespace folkso;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_of(int repeats, F&& fn) {
  double best = 1e100;
  for (int i = 0; i < repeats; i++) {
    auto start = Clock::now();
    fn();
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed < best) best = elapsed;
  }
  return best;
}

SynthSpec bench_spec(int users, int records_per_user) {
  SynthSpec spec;
  for (int i = 0; i < 50; i++) {
    spec.taxonomy.push_back({"broad" + std::to_string(i / 5),
                             "narrow" + std::to_string(i)});
  }
  spec.users = users;
  spec.records_per_user = records_per_user;
  spec.inversion_rate = 0.15;
  spec.idiosyncrasy_rate = 0.1;
  spec.seed = 424242;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  int users = argc > 1 ? std::atoi(argv[1]) : 2000;
  int records_per_user = argc > 2 ? std::atoi(argv[2]) : 50;
  int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  const NormalizerConfig cfg;
  Corpus corpus = generate(bench_spec(users, records_per_user), cfg);
  std::printf("corpus: %zu records, %zu users\n", corpus.record_count, corpus.user_count);
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled (serial build)\n");
#endif

  std::vector<RelationTally> serial_tallies;
  std::vector<RelationTally> parallel_tallies;
  double tally_serial = time_best_of(repeats, [&] {
    serial_tallies = tally_users_serial(corpus, cfg);
  });
  double tally_parallel = time_best_of(repeats, [&] {
    parallel_tallies = tally_users(corpus, cfg);
  });
  if (serial_tallies != parallel_tallies) {
    std::fprintf(stderr, "FAIL: parallel tallies differ from serial reference\n");
    return 1;
  }
  std::printf("tally_users       serial %8.3fs  parallel %8.3fs  speedup %.2fx  (%zu pairs)\n",
              tally_serial, tally_parallel, tally_serial / tally_parallel,
              serial_tallies.size());

  auto docs = build_documents(corpus, cfg);
  CooccurrenceStats serial_stats;
  CooccurrenceStats parallel_stats;
  double co_serial = time_best_of(repeats, [&] {
    serial_stats = count_cooccurrence_serial(docs);
  });
  double co_parallel = time_best_of(repeats, [&] {
    parallel_stats = count_cooccurrence(docs);
  });
  if (!(serial_stats == parallel_stats)) {
    std::fprintf(stderr, "FAIL: parallel co-occurrence stats differ from serial reference\n");
    return 1;
  }
  std::printf("count_cooccurrence serial %8.3fs  parallel %8.3fs  speedup %.2fx  (%zu pairs)\n",
              co_serial, co_parallel, co_serial / co_parallel, serial_stats.co.size());
  return 0;
}

// Copyright 2026 The cvqss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP batch kernels.  Run with
//   ./build/bench/cvqss-bench

#include <benchmark/benchmark.h>

#include "cvqss/channel.hpp"
#include "cvqss/haar.hpp"
#include "cvqss/search.hpp"
#include "cvqss/sharing.hpp"

namespace {

cvqss::SharingScheme make_scheme(int n, int m, std::uint64_t seed) {
  return cvqss::SharingScheme(
      n, m,
      cvqss::sample_haar(n + m, cvqss::RngSeed{seed},
                         cvqss::SampleMethod::orthonormalize));
}

void BM_AccessStructureSerial(benchmark::State& state) {
  const auto scheme = make_scheme(6, 2, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::access_structure_reference(scheme));
  }
}
BENCHMARK(BM_AccessStructureSerial)->Unit(benchmark::kMillisecond);

void BM_AccessStructureParallel(benchmark::State& state) {
  const auto scheme = make_scheme(6, 2, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::access_structure(scheme));
  }
}
BENCHMARK(BM_AccessStructureParallel)->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::search_schemes_reference(
        4, 1, 128, cvqss::RngSeed{5}));
  }
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cvqss::search_schemes(4, 1, 128, cvqss::RngSeed{5}));
  }
}
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond);

void BM_SweepSerial(benchmark::State& state) {
  const auto scheme = make_scheme(4, 1, 3);
  const auto parties = cvqss::threshold_subsets(scheme);
  std::vector<double> grid;
  for (int i = 0; i < 400; ++i) grid.push_back(0.1 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::sweep_reference(scheme, parties, grid));
  }
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto scheme = make_scheme(4, 1, 3);
  const auto parties = cvqss::threshold_subsets(scheme);
  std::vector<double> grid;
  for (int i = 0; i < 400; ++i) grid.push_back(0.1 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::sweep(scheme, parties, grid));
  }
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

void BM_HaarBatchSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::sample_haar_batch_reference(
        6, 256, cvqss::RngSeed{17}, cvqss::SampleMethod::orthonormalize));
  }
}
BENCHMARK(BM_HaarBatchSerial)->Unit(benchmark::kMillisecond);

void BM_HaarBatchParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvqss::sample_haar_batch(
        6, 256, cvqss::RngSeed{17}, cvqss::SampleMethod::orthonormalize));
  }
}
BENCHMARK(BM_HaarBatchParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The diffbasis Authors.
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

#include <benchmark/benchmark.h>

#include "diffbasis/search.hpp"

namespace db = diffbasis;

static void BM_EtaExact(benchmark::State& state) {
  db::SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = db::eta_exact(state.range(0), 1, 0, opts).nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_EtaExact)->Args({20, 1})->Args({30, 1})->Args({30, 4})->Unit(benchmark::kMillisecond);

static void BM_AlphaExact(benchmark::State& state) {
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = db::alpha_exact(state.range(0), state.range(1)).nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_AlphaExact)->Args({40, 1})->Args({40, 2})->Unit(benchmark::kMillisecond);

static void BM_EtaVsExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(db::eta_vs_exact(3, 3, state.range(0)).optimum);
}
BENCHMARK(BM_EtaVsExact)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

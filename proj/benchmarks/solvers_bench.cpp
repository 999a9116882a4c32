// Copyright 2026 The pebblegame Authors
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

#include "pebble/approx.hpp"
#include "pebble/conflict_graph.hpp"
#include "pebble/exact.hpp"
#include "pebble/generators.hpp"
#include "pebble/levels.hpp"

namespace {

using namespace pebble;

// Bipartite DAG with exactly m edges, drawn from a fixed seed.
Dag instance(std::size_t m, std::uint64_t seed = 42) {
  Rng rng(seed);
  for (;;) {
    Dag dag = random_bipartite_dag(6, 6, static_cast<double>(m) / 36.0, rng);
    if (dag.edge_count() == m) return dag;
  }
}

void BM_HeldKarp(benchmark::State& state) {
  const Dag dag = instance(static_cast<std::size_t>(state.range(0)));
  const ConflictGraph cg(dag, CostModel::Standard);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp_path(cg).cost);
}
BENCHMARK(BM_HeldKarp)->DenseRange(8, 18, 2)->Unit(benchmark::kMillisecond);

void BM_Christofides(benchmark::State& state) {
  const Dag dag = instance(static_cast<std::size_t>(state.range(0)));
  const ConflictGraph cg(dag, CostModel::Standard);
  for (auto _ : state) benchmark::DoNotOptimize(christofides_path(cg).cost);
}
BENCHMARK(BM_Christofides)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_StateSpace(benchmark::State& state) {
  const Dag dag = instance(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_space_opt(dag, 2, CostModel::Standard).cost);
  }
}
BENCHMARK(BM_StateSpace)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const Dag dag = instance(static_cast<std::size_t>(state.range(0)));
  const ConflictGraph cg(dag, CostModel::Standard);
  const Strategy s = path_to_strategy(dag, christofides_path(cg), CostModel::Standard);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(dag, s, 2).cost);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.moves.size()));
}
BENCHMARK(BM_Simulate)->DenseRange(8, 20, 4);

void BM_MultiLevel(benchmark::State& state) {
  Rng rng(11);
  const Dag dag = random_leveled_dag(static_cast<std::size_t>(state.range(0)), 8, rng);
  const LeveledDag ld = compute_levels(dag);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multi_level_solve(ld, christofides_path, CostModel::Standard).total_cost);
  }
}
BENCHMARK(BM_MultiLevel)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

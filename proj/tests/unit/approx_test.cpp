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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "../support/oracles.hpp"
#include "pebble/approx.hpp"
#include "pebble/dag_io.hpp"
#include "pebble/error.hpp"
#include "pebble/exact.hpp"
#include "pebble/generators.hpp"

namespace pebble {
namespace {

std::string star_text(std::size_t n) {
  std::string text;
  for (std::size_t i = 0; i < n; ++i) text += "s" + std::to_string(i) + " t\n";
  return text;
}

Cost weight_of(const ConflictGraph& cg, const std::vector<VertexPair>& edges) {
  Cost total = 0;
  for (auto [a, b] : edges) total += cg.weight(a, b);
  return total;
}

TEST(Mst, StarTieBreak) {
  const Dag dag = parse_edge_list(star_text(5));
  const ConflictGraph cg(dag, CostModel::Standard);
  const SpanningTree t = mst(cg);
  EXPECT_EQ(t.weight, 4);
  for (auto [parent, child] : t.edges) EXPECT_EQ(parent, 0u) << child;
}

TEST(Mst, MatchesPrueferOracle) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag dag = random_one_level_dag(7, rng);
    if (dag.edge_count() == 0) continue;
    const ConflictGraph cg(dag, trial % 2 ? CostModel::Fused : CostModel::Standard);
    const auto w = [&](std::size_t a, std::size_t b) { return Cost{cg.weight(a, b)}; };
    const SpanningTree t = mst(cg);
    EXPECT_EQ(t.edges.size(), cg.size() - 1);
    EXPECT_EQ(weight_of(cg, t.edges), t.weight);
    EXPECT_EQ(t.weight, testing::pruefer_min_spanning_tree(cg.size(), w));
  }
}

TEST(Mst, EmptyRejected) {
  const Dag empty;
  EXPECT_THROW(mst(ConflictGraph(empty, CostModel::Standard)), ValidationError);
}

TEST(Matching, CrosswisePairs) {
  // 0,2 share x and 1,3 share y; any other pair is disjoint.
  const Dag dag = parse_edge_list("a x\nb y\nc x\nd y\n");
  const ConflictGraph cg(dag, CostModel::Standard);
  const std::vector<std::size_t> odd{0, 1, 2, 3};
  const Matching m = min_cost_perfect_matching(cg, odd);
  EXPECT_EQ(m.weight, 2);
  EXPECT_EQ(m.pairs, (std::vector<VertexPair>{{0, 2}, {1, 3}}));
}

TEST(Matching, EmptyAndOddSets) {
  const Dag dag = parse_edge_list(star_text(3));
  const ConflictGraph cg(dag, CostModel::Standard);
  EXPECT_EQ(min_cost_perfect_matching(cg, std::vector<std::size_t>{}).weight, 0);
  EXPECT_THROW(min_cost_perfect_matching(cg, std::vector<std::size_t>{0, 1, 2}), ValidationError);
}

TEST(Matching, MatchesEnumeration) {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag dag = random_one_level_dag(10, rng);
    if (dag.edge_count() < 2) continue;
    const ConflictGraph cg(dag, CostModel::Standard);
    std::vector<std::size_t> vertices(cg.size() - cg.size() % 2);
    for (std::size_t i = 0; i < vertices.size(); ++i) vertices[i] = i;
    const auto w = [&](std::size_t a, std::size_t b) { return Cost{cg.weight(a, b)}; };
    const Matching m = min_cost_perfect_matching(cg, vertices);
    EXPECT_EQ(m.weight, testing::enumerate_min_matching(vertices, w));
    EXPECT_EQ(m.pairs.size(), vertices.size() / 2);
  }
}

TEST(Euler, SmallMultigraphs) {
  const auto tri = euler_tour({3, {{0, 1}, {1, 2}, {2, 0}}});
  EXPECT_EQ(tri.size(), 4u);
  EXPECT_EQ(tri.front(), 0u);
  EXPECT_EQ(tri.back(), 0u);
  EXPECT_EQ(euler_tour({2, {{0, 1}, {0, 1}}}), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(euler_tour({1, {}}), (std::vector<std::size_t>{0}));
  EXPECT_THROW(euler_tour({2, {{0, 1}}}), ValidationError);
  EXPECT_THROW(euler_tour({3, {{0, 1}, {0, 1}}}), ValidationError);
  EXPECT_THROW(euler_tour({4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}}), ValidationError);
}

// Walk uses every multigraph edge exactly once.
TEST(Euler, UsesEveryEdgeOnce) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag dag = random_one_level_dag(12, rng);
    if (dag.edge_count() < 2) continue;
    const ConflictGraph cg(dag, CostModel::Standard);
    const SpanningTree t = mst(cg);
    const auto odd = odd_degree_vertices(t, cg.size());
    const Matching m = min_cost_perfect_matching(cg, odd);
    const EulerMultigraph f = merge(t, m, cg.size());
    const auto walk = euler_tour(f);
    ASSERT_EQ(walk.size(), (cg.size() - 1) + m.pairs.size() + 1);
    std::multiset<VertexPair> expected, seen;
    for (auto [a, b] : f.edges) expected.insert({std::min(a, b), std::max(a, b)});
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      seen.insert({std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])});
    }
    EXPECT_EQ(seen, expected);
  }
}

TEST(Christofides, Bounds) {
  Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const Dag dag = random_one_level_dag(12, rng);
    if (dag.edge_count() < 2) continue;
    for (CostModel model : {CostModel::Standard, CostModel::Fused}) {
      const ConflictGraph cg(dag, model);
      const auto r = christofides(cg);
      const Cost opt = held_karp_path(cg).cost;
      std::vector<std::size_t> sorted = r.cycle;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], i);
      EXPECT_LE(r.tree.weight, opt);
      EXPECT_LE(r.cycle_weight, r.multigraph_weight);
      EXPECT_LE(r.path.cost, r.closing_edge_path_weight);
      EXPECT_EQ(r.path.cost, path_cost(cg, r.path.order));
      const double ratio = static_cast<double>(r.path.cost + 3) / static_cast<double>(opt + 3);
      EXPECT_LE(ratio, 21.0 / 8.0);
      const Strategy s = path_to_strategy(dag, r.path, model);
      EXPECT_EQ(simulate(dag, s, 2).cost, r.path.cost + 3);
    }
  }
}

TEST(Christofides, SingleEdge) {
  const Dag dag = parse_edge_list("s t\n");
  const HamPath p = christofides_path(ConflictGraph(dag, CostModel::Standard));
  EXPECT_EQ(p.order, (std::vector<EdgeId>{0}));
  EXPECT_EQ(p.cost, 0);
}

TEST(MultiLevel, OneLevelMatchesSingleSolve) {
  const Dag dag = parse_edge_list("a x\nb x\na y\n");
  const auto r = multi_level_solve(compute_levels(dag), held_karp_path, CostModel::Standard);
  EXPECT_EQ(r.total_cost, held_karp_path(ConflictGraph(dag, CostModel::Standard)).cost + 3);
  EXPECT_EQ(simulate(dag, r.strategy, 2).cost, r.total_cost);
}

TEST(MultiLevel, ChainOfTwo) {
  const Dag dag = parse_edge_list("a b\nb c\n");
  const auto ld = compute_levels(dag);
  const auto r = multi_level_solve(ld, christofides_path, CostModel::Standard);
  EXPECT_EQ(r.level_costs, (std::vector<Cost>{3, 3}));
  EXPECT_EQ(r.total_cost, 6);
  EXPECT_EQ(simulate(dag, r.strategy, 2).cost, 6);
  const auto lb = multi_level_lower_bound(ld, CostModel::Standard);
  EXPECT_EQ(lb.level_opt, (std::vector<Cost>{3, 3}));
  EXPECT_DOUBLE_EQ(lb.lower_bound, 3.0);
}

TEST(MultiLevel, RandomLeveledReplays) {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag dag = random_leveled_dag(3, 5, rng);
    const auto ld = compute_levels(dag);
    for (CostModel model : {CostModel::Standard, CostModel::Fused}) {
      const auto r = multi_level_solve(ld, christofides_path, model);
      EXPECT_EQ(simulate(dag, r.strategy, 2).cost, r.total_cost);
      const auto lb = multi_level_lower_bound(ld, model);
      EXPECT_GE(static_cast<double>(r.total_cost), lb.lower_bound);
      if (dag.node_count() <= kStateSpaceNodeLimit && dag.edge_count() <= kStateSpaceEdgeLimit &&
          model == CostModel::Standard) {
        EXPECT_GE(state_space_opt(dag, 2, model).cost, lb.lower_bound);
      }
    }
  }
}

}  // namespace
}  // namespace pebble

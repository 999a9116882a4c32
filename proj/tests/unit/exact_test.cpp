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

#include "../support/oracles.hpp"
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

TEST(HeldKarp, StarIsAllOnes) {
  const Dag dag = parse_edge_list(star_text(4));
  const ConflictGraph cg(dag, CostModel::Standard);
  const HamPath p = held_karp_path(cg);
  EXPECT_EQ(p.cost, 3);
  EXPECT_EQ(p.order.size(), 4u);
  EXPECT_EQ(path_cost(cg, p.order), p.cost);
}

TEST(HeldKarp, TwoDisjointStars) {
  // Two stars of three leaves joined by one disjoint-pair hop.
  const Dag dag = parse_edge_list("a x\nb x\nc x\nd y\ne y\nf y\n");
  EXPECT_EQ(held_karp_path(ConflictGraph(dag, CostModel::Standard)).cost, 7);
  EXPECT_EQ(held_karp_path(ConflictGraph(dag, CostModel::Fused)).cost, 6);
}

TEST(HeldKarp, TinyCases) {
  const Dag empty;
  EXPECT_THROW(held_karp_path(ConflictGraph(empty, CostModel::Standard)), ValidationError);
  const Dag one = parse_edge_list("s t\n");
  const HamPath p = held_karp_path(ConflictGraph(one, CostModel::Standard));
  EXPECT_EQ(p.order, (std::vector<EdgeId>{0}));
  EXPECT_EQ(p.cost, 0);
}

TEST(HeldKarp, MatchesFactorialOracle) {
  Rng rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const Dag dag = random_one_level_dag(8, rng);
    for (CostModel model : {CostModel::Standard, CostModel::Fused}) {
      const ConflictGraph cg(dag, model);
      const auto w = [&](std::size_t a, std::size_t b) { return Cost{cg.weight(a, b)}; };
      const HamPath p = held_karp_path(cg);
      EXPECT_EQ(p.cost, testing::factorial_min_path(cg.size(), w));
      EXPECT_EQ(path_cost(cg, p.order), p.cost);
    }
  }
}

TEST(HeldKarp, SizeGuard) {
  std::string text;
  for (int i = 0; i < 21; ++i) text += "s" + std::to_string(i) + " t\n";
  const Dag dag = parse_edge_list(text);
  EXPECT_THROW(held_karp_path(ConflictGraph(dag, CostModel::Standard)), SizeGuardError);
}

TEST(Tour, MatchesFactorialCycle) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag dag = random_one_level_dag(7, rng);
    if (dag.edge_count() == 0) continue;
    const ConflictGraph cg(dag, CostModel::Standard);
    const DepotGraph dg(cg);
    const auto w = [&](std::size_t a, std::size_t b) { return Cost{dg.weight(a, b)}; };
    const Tour t = exhaustive_tour(dg);
    EXPECT_EQ(t.cost, testing::factorial_min_cycle(dg.size(), w));
    EXPECT_EQ(t.order.front(), dg.depot());
    EXPECT_EQ(t.order.size(), dg.size());
  }
}

TEST(Tour, SizeGuard) {
  const Dag dag = parse_edge_list(star_text(10));
  const ConflictGraph cg(dag, CostModel::Standard);
  EXPECT_THROW(exhaustive_tour(DepotGraph(cg)), SizeGuardError);
}

// Optimal M=2 cost on a one-level DAG is the shortest path plus 3.
TEST(StateSpace, AgreesWithHeldKarp) {
  Rng rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const Dag dag = random_one_level_dag(7, rng);
    if (dag.edge_count() == 0) continue;
    for (CostModel model : {CostModel::Standard, CostModel::Fused}) {
      const auto opt = state_space_opt(dag, 2, model);
      EXPECT_EQ(opt.cost, held_karp_path(ConflictGraph(dag, model)).cost + 3);
      EXPECT_EQ(simulate(dag, opt.strategy, 2).cost, opt.cost);
    }
  }
}

TEST(StateSpace, KnownValues) {
  EXPECT_EQ(state_space_opt(parse_edge_list("x1 y1\nx2 y1\n"), 2, CostModel::Standard).cost, 4);
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(state_space_opt(parse_edge_list(star_text(n)), 2, CostModel::Standard).cost,
              static_cast<Cost>(n + 2));
  }
  EXPECT_EQ(state_space_opt(Dag{}, 2, CostModel::Standard).cost, 0);
}

TEST(StateSpace, MonotoneInCapacityAndModel) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Dag dag = testing::random_dag(rng, 6, 7);
    Cost previous = state_space_opt(dag, 2, CostModel::Standard).cost;
    for (std::size_t m = 3; m <= 4; ++m) {
      const Cost cost = state_space_opt(dag, m, CostModel::Standard).cost;
      EXPECT_LE(cost, previous);
      previous = cost;
    }
    EXPECT_LE(state_space_opt(dag, 2, CostModel::Fused).cost,
              state_space_opt(dag, 2, CostModel::Standard).cost);
  }
}

TEST(StateSpace, GuardsAndUnreachable) {
  EXPECT_THROW(state_space_opt(parse_edge_list(star_text(13)), 2, CostModel::Standard),
               SizeGuardError);
  // One pebble can never cover both ends of an edge.
  EXPECT_THROW(state_space_opt(parse_edge_list("s t\n"), 1, CostModel::Standard),
               ValidationError);
}

}  // namespace
}  // namespace pebble

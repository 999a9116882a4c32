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

#include "pebble/dag_io.hpp"
#include "pebble/error.hpp"
#include "pebble/generators.hpp"
#include "pebble/levels.hpp"

namespace pebble {
namespace {

TEST(Levels, OneLevel) {
  const Dag dag = parse_edge_list("x1 y1\nx2 y1\nx2 y2\n");
  const auto ld = compute_levels(dag);
  EXPECT_EQ(ld.k, 2u);
  ASSERT_EQ(ld.levels.size(), 1u);
  EXPECT_EQ(ld.levels[0].dag.edge_count(), 3u);
  EXPECT_EQ(ld.levels[0].base_edge, (std::vector<EdgeId>{0, 1, 2}));
}

TEST(Levels, Chain) {
  const Dag dag = parse_edge_list("a b\nb c\n");
  const auto ld = compute_levels(dag);
  EXPECT_EQ(ld.k, 3u);
  ASSERT_EQ(ld.levels.size(), 2u);
  const Level& first = ld.levels[0];
  const Level& second = ld.levels[1];
  ASSERT_EQ(first.dag.edge_count(), 1u);
  EXPECT_EQ(first.dag.name(first.dag.edge(0).src), "a");
  EXPECT_EQ(first.dag.name(first.dag.edge(0).dst), "b");
  EXPECT_EQ(second.dag.name(second.dag.edge(0).src), "b");
  EXPECT_EQ(second.dag.name(second.dag.edge(0).dst), "c");
  EXPECT_TRUE(second.dag.is_one_level());
}

TEST(Levels, TriangleIsNotLeveled) {
  const Dag dag = parse_edge_list("a b\na c\nb c\n");
  try {
    compute_levels(dag);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("a -> c"), std::string::npos);
  }
}

TEST(Levels, EmptyDag) {
  const auto ld = compute_levels(Dag{});
  EXPECT_EQ(ld.k, 0u);
  EXPECT_TRUE(ld.levels.empty());
}

// Concatenating the level edge sets reproduces the input edge set.
TEST(Levels, PartitionProperty) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag dag = random_leveled_dag(uniform_between(rng, 1, 4), 6, rng);
    const auto ld = compute_levels(dag);
    ASSERT_EQ(ld.levels.size() + 1, ld.k);
    std::vector<EdgeId> all;
    for (std::size_t i = 0; i < ld.levels.size(); ++i) {
      const Level& level = ld.levels[i];
      EXPECT_TRUE(level.dag.is_one_level());
      for (EdgeId e = 0; e < level.dag.edge_count(); ++e) {
        const EdgeId base = level.base_edge[e];
        all.push_back(base);
        const Edge& le = level.dag.edge(e);
        EXPECT_EQ(level.base_node[le.src], dag.edge(base).src);
        EXPECT_EQ(level.base_node[le.dst], dag.edge(base).dst);
        EXPECT_EQ(ld.node_level[dag.edge(base).src], i);
      }
    }
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), dag.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) EXPECT_EQ(all[e], e);
  }
}

}  // namespace
}  // namespace pebble

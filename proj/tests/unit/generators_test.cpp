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

#include "pebble/dag_io.hpp"
#include "pebble/error.hpp"
#include "pebble/generators.hpp"
#include "pebble/levels.hpp"

namespace pebble {
namespace {

TEST(Rng, Deterministic) {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(uniform_index(a, 17), uniform_index(b, 17));
    EXPECT_EQ(bernoulli(a, 0.3), bernoulli(b, 0.3));
  }
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = uniform_between(c, 3, 6);
    EXPECT_GE(v, 3u);
    EXPECT_LE(v, 6u);
  }
}

TEST(Generators, BipartiteDeterministicAndValid) {
  Rng a(7), b(7);
  const Dag x = random_bipartite_dag(5, 4, 0.4, a);
  const Dag y = random_bipartite_dag(5, 4, 0.4, b);
  EXPECT_EQ(to_edge_list(x), to_edge_list(y));
  EXPECT_TRUE(x.is_one_level());
  for (NodeId v = 0; v < x.node_count(); ++v) {
    EXPECT_GT(x.in_edges(v).size() + x.out_edges(v).size(), 0u);
  }
  Rng r(1);
  EXPECT_THROW(random_bipartite_dag(2, 2, 1.5, r), ValidationError);
  EXPECT_EQ(random_bipartite_dag(3, 3, 1.0, r).edge_count(), 9u);
  EXPECT_EQ(random_bipartite_dag(3, 3, 0.0, r).edge_count(), 0u);
}

TEST(Generators, OneLevelAndLeveled) {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Dag d = random_one_level_dag(8, rng);
    EXPECT_TRUE(d.is_one_level());
    EXPECT_LE(d.edge_count(), 8u);
    const Dag l = random_leveled_dag(3, 4, rng);
    EXPECT_EQ(compute_levels(l).levels.size(), 3u);
  }
}

}  // namespace
}  // namespace pebble

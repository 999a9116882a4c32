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

#pragma once

#include <cstddef>
#include <vector>

#include "pebble/dag.hpp"

namespace pebble {

/// One bipartite level of a leveled DAG, as a standalone one-level DAG plus
/// the maps back to the base graph.
struct Level {
  Dag dag;
  std::vector<NodeId> base_node;  ///< indexed by local NodeId
  std::vector<EdgeId> base_edge;  ///< indexed by local EdgeId
};

struct LeveledDag {
  Dag base;
  /// level(v): longest path length from any source to v.
  std::vector<std::size_t> node_level;
  /// levels[i] holds the edges from node level i to node level i + 1.
  std::vector<Level> levels;
  /// Number of node levels; levels.size() == k - 1 for a non-empty DAG.
  std::size_t k = 0;
};

/// Splits a DAG into bipartite levels by longest path from the sources.
/// Throws ValidationError naming the first edge (in edge order) that spans
/// more than one level.
LeveledDag compute_levels(const Dag& dag);

}  // namespace pebble

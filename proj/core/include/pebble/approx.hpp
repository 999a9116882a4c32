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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pebble/conflict_graph.hpp"
#include "pebble/game.hpp"
#include "pebble/levels.hpp"

namespace pebble {

using VertexPair = std::pair<std::size_t, std::size_t>;

struct SpanningTree {
  std::vector<VertexPair> edges;  ///< (parent, child) in insertion order
  Cost weight = 0;
};

struct Matching {
  std::vector<VertexPair> pairs;  ///< (smaller, larger)
  Cost weight = 0;
};

/// Undirected multigraph; parallel edges allowed, insertion order kept.
struct EulerMultigraph {
  std::size_t vertex_count = 0;
  std::vector<VertexPair> edges;
};

/// Largest odd-vertex set the exact matching accepts (2^k table).
inline constexpr std::size_t kMatchingLimit = 24;

/// Prim's algorithm on the implicit complete graph, O(m^2) weight lookups.
/// Among equal-weight candidates the lexicographically smallest
/// (min, max) vertex pair is taken. Throws ValidationError for m = 0.
SpanningTree mst(const ConflictGraph& cg);

/// Vertices of odd degree in the tree, ascending.
std::vector<std::size_t> odd_degree_vertices(const SpanningTree& tree, std::size_t vertex_count);

/// Exact minimum-weight perfect matching on `odd` by subset dynamic
/// programming: the lowest unmatched vertex is paired with each candidate in
/// turn, smallest partner first on ties. Throws ValidationError when |odd| is
/// odd and SizeGuardError above kMatchingLimit.
Matching min_cost_perfect_matching(const ConflictGraph& cg, std::span<const std::size_t> odd);

/// Tree plus matching as one multigraph on the conflict-graph vertices.
EulerMultigraph merge(const SpanningTree& tree, const Matching& matching, std::size_t vertex_count);

/// Closed walk over every edge once (Hierholzer), starting at vertex 0 and
/// taking edges in insertion order. Returns {0} for a single isolated vertex.
/// Throws ValidationError for odd degrees or a disconnected multigraph.
std::vector<std::size_t> euler_tour(const EulerMultigraph& f);

/// Everything Christofides' construction produced, for inspection.
struct ChristofidesResult {
  SpanningTree tree;
  std::vector<std::size_t> odd;
  Matching matching;
  Cost multigraph_weight = 0;          ///< tree.weight + matching.weight
  std::vector<std::size_t> euler;      ///< closed walk
  std::vector<std::size_t> cycle;      ///< first occurrences of the walk
  Cost cycle_weight = 0;               ///< including the closing edge
  Cost closing_edge_path_weight = 0;   ///< cycle opened at its closing edge
  HamPath path;                        ///< cycle opened at its heaviest edge
};

/// MST, matching on odd vertices, Euler walk, shortcut to first occurrences
/// (from vertex 0), then drop the heaviest edge of the resulting cycle (the
/// first one in cycle order on ties).
ChristofidesResult christofides(const ConflictGraph& cg);

HamPath christofides_path(const ConflictGraph& cg);

using PathSolver = std::function<HamPath(const ConflictGraph&)>;

struct MultiLevelResult {
  Strategy strategy;              ///< over the base DAG, M = 2
  std::vector<Cost> level_costs;  ///< replayed cost of each level's strategy
  Cost total_cost = 0;
};

/// Solves every level on its own with `solver` and runs the levels one after
/// another; leftover pebbles are dropped between levels at no cost. Level
/// costs come from replaying each level strategy.
MultiLevelResult multi_level_solve(const LeveledDag& ld, const PathSolver& solver,
                                   CostModel model);

/// Per-level optima (Held-Karp + 3) and the averaged lower bound
/// sum(OPT_level) / (k - 1) on the whole-DAG optimum.
struct LevelLowerBound {
  std::vector<Cost> level_opt;
  double lower_bound = 0.0;
};

LevelLowerBound multi_level_lower_bound(const LeveledDag& ld, CostModel model);

}  // namespace pebble

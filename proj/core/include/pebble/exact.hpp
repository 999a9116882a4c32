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

#include "pebble/conflict_graph.hpp"
#include "pebble/dag.hpp"
#include "pebble/game.hpp"

namespace pebble {

/// Largest conflict graph held_karp_path accepts (table is 2^m * m bytes x2).
inline constexpr std::size_t kHeldKarpLimit = 20;
/// Largest base graph exhaustive_tour accepts (m! tours).
inline constexpr std::size_t kTourLimit = 9;
/// Largest DAG state_space_opt accepts, in nodes and in edges.
inline constexpr std::size_t kStateSpaceNodeLimit = 12;
inline constexpr std::size_t kStateSpaceEdgeLimit = 12;

/// Minimum-cost Hamiltonian path by subset dynamic programming. Ties go to
/// the smallest last vertex, then the smallest predecessor at every step.
/// Throws SizeGuardError above kHeldKarpLimit and ValidationError for m = 0.
HamPath held_karp_path(const ConflictGraph& cg);

/// Closed tour through every vertex of a depot graph, starting and ending at
/// the depot.
struct Tour {
  std::vector<std::size_t> order;  ///< order.front() == depot; closing edge implied
  Cost cost = 0;
};

/// Exact minimum tour by enumerating all orders of the non-depot vertices
/// (first lexicographic order wins ties). Throws SizeGuardError above
/// kTourLimit.
Tour exhaustive_tour(const DepotGraph& dg);

struct SearchResult {
  Cost cost = 0;
  Strategy strategy;
  std::size_t states_settled = 0;
};

/// Optimal strategy for any capacity M by uniform-cost search over game
/// states (bucket queue; all move costs are 0 or 1). Moves that can never
/// help are not generated: to_blue, and loads of vertices with no remaining
/// edges. Throws SizeGuardError above the node/edge limits and
/// ValidationError when no terminal state is reachable (e.g. M < 2 with edges).
SearchResult state_space_opt(const Dag& dag, std::size_t capacity, CostModel model);

}  // namespace pebble

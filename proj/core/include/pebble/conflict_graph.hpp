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
#include <span>
#include <string>
#include <vector>

#include "pebble/dag.hpp"
#include "pebble/error.hpp"
#include "pebble/game.hpp"

namespace pebble {

/// Complete graph over the edges of a one-level DAG. The weight of a pair is
/// the cost, with two pebbles, of deleting one edge right after the other:
///
///   shared target   1 (both models)
///   shared source   2 standard, 1 fused
///   disjoint        3 standard, 2 fused
///
/// Weights are computed on demand; the m^2 pairs are never stored. The DAG
/// must outlive the graph.
class ConflictGraph {
 public:
  /// Throws ValidationError unless every DAG edge runs source -> sink.
  ConflictGraph(const Dag& dag, CostModel model);

  std::size_t size() const noexcept { return edges_.size(); }
  const Dag& dag() const noexcept { return *dag_; }
  CostModel model() const noexcept { return model_; }
  int max_weight() const noexcept { return model_ == CostModel::Fused ? 2 : 3; }

  int weight(EdgeId a, EdgeId b) const {
    if (a == b) throw ValidationError("conflict weight of an edge with itself");
    const Edge& x = edges_[a];
    const Edge& y = edges_[b];
    if (x.dst == y.dst) return 1;
    if (x.src == y.src) return model_ == CostModel::Fused ? 1 : 2;
    return model_ == CostModel::Fused ? 2 : 3;
  }

 private:
  const Dag* dag_;
  std::span<const Edge> edges_;
  CostModel model_;
};

/// Standalone form of ConflictGraph::weight.
int conflict_weight(const Dag& dag, EdgeId a, EdgeId b, CostModel model);

/// Visiting order over all conflict-graph vertices (DAG edges).
struct HamPath {
  std::vector<EdgeId> order;
  Cost cost = 0;
};

Cost path_cost(const ConflictGraph& cg, std::span<const EdgeId> order);

/// Validates that `order` is a permutation of 0..m-1 and prices it.
HamPath make_path(const ConflictGraph& cg, std::vector<EdgeId> order);

/// Canonical two-pebble strategy deleting the edges in path order: load the
/// first edge's target and source, then per transition
///
///   shared target   remove v1, place v2
///   shared source   store w1, remove w1, place w2    (fused: fused w1->w2)
///   disjoint        store w1, remove w1, remove v1, place v2, place w2
///                   (fused: fused w1->v2, remove v1, place w2)
///
/// and finally store the last target. Replays with M = 2 at cost path.cost + 3.
Strategy path_to_strategy(const Dag& dag, const HamPath& path, CostModel model);

/// Replays a valid strategy with M = 2 and returns its edge-deletion order,
/// priced under the strategy's model. Throws ValidationError when a single
/// move deletes two or more edges; replay errors propagate.
HamPath strategy_to_path(const Dag& dag, const Strategy& strategy);

/// Conflict graph plus a depot vertex (index size() - 1) joined to every
/// other vertex with weight 2. A minimum tour here is a minimum path of the
/// base graph closed through the depot, so the costs differ by exactly 4.
class DepotGraph {
 public:
  explicit DepotGraph(const ConflictGraph& base);

  std::size_t size() const noexcept { return base_->size() + 1; }
  std::size_t depot() const noexcept { return base_->size(); }
  const ConflictGraph& base() const noexcept { return *base_; }

  int weight(std::size_t a, std::size_t b) const {
    if (a == b) throw ValidationError("depot graph weight of a vertex with itself");
    if (a == depot() || b == depot()) return kDepotWeight;
    return base_->weight(a, b);
  }

  static constexpr int kDepotWeight = 2;

 private:
  const ConflictGraph* base_;
};

/// Throws ValidationError for an empty conflict graph.
DepotGraph augment_with_depot(const ConflictGraph& cg);

/// {"m":..,"model":..,"weights":[[i,j,w],...]} over pairs i < j.
std::string to_json(const ConflictGraph& cg);

/// Weight-labelled undirected graph; pairs at the model's maximum weight are
/// dashed.
std::string to_dot(const ConflictGraph& cg);

}  // namespace pebble

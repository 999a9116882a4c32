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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pebble {

/// Dense node index, 0..node_count()-1.
using NodeId = std::size_t;
/// Dense edge index, 0..edge_count()-1, in insertion order.
using EdgeId = std::size_t;

enum class NodeRole { Source, Internal, Sink };

std::string_view to_string(NodeRole role);

/// A dependency: the value of `dst` accumulates the value of `src`.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Computational DAG. Immutable once built; roles are derived from degrees
/// (in-degree 0 is a source, otherwise out-degree 0 is a sink).
class Dag {
 public:
  Dag() = default;

  /// Validates and builds a DAG. Throws ValidationError on self-loops,
  /// duplicate edges, out-of-range endpoints, duplicate names or cycles.
  static Dag create(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(NodeId v) const { return names_.at(v); }
  std::span<const std::string> names() const noexcept { return names_; }
  NodeRole role(NodeId v) const { return roles_.at(v); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(NodeId v) const { return in_.at(v); }
  std::size_t in_degree(NodeId v) const { return in_.at(v).size(); }
  std::size_t out_degree(NodeId v) const { return out_.at(v).size(); }

  std::optional<NodeId> find(std::string_view name) const;
  std::optional<EdgeId> find_edge(NodeId src, NodeId dst) const;

  std::vector<NodeId> sources() const;
  std::vector<NodeId> sinks() const;

  /// True when every edge runs from a source to a sink, i.e. the DAG has a
  /// single level of edges.
  bool is_one_level() const;

 private:
  std::vector<std::string> names_;
  std::vector<NodeRole> roles_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Returns the edges of some directed cycle, or nullopt when the edge set is
/// acyclic. Endpoints must be < node_count.
std::optional<std::vector<EdgeId>> find_cycle(std::size_t node_count,
                                              std::span<const Edge> edges);

/// Node order in which every edge points forward. Requires an acyclic graph.
std::vector<NodeId> topological_order(const Dag& dag);

}  // namespace pebble

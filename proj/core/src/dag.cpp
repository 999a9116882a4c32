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

#include "pebble/dag.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pebble/error.hpp"

namespace pebble {

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Source:
      return "source";
    case NodeRole::Internal:
      return "internal";
    case NodeRole::Sink:
      return "sink";
  }
  return "?";
}

Dag Dag::create(std::vector<std::string> names, std::vector<Edge> edges) {
  const std::size_t n = names.size();
  Dag dag;
  dag.index_.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!dag.index_.emplace(names[v], v).second) {
      throw ValidationError("duplicate node name '" + names[v] + "'");
    }
  }

  std::set<Edge> seen;
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.src >= n || ed.dst >= n) {
      throw ValidationError("edge " + std::to_string(e) +
                            " references an unknown node");
    }
    if (ed.src == ed.dst) {
      throw ValidationError("self-loop on '" + names[ed.src] + "'");
    }
    if (!seen.insert(ed).second) {
      throw ValidationError("duplicate edge " + names[ed.src] + " -> " +
                            names[ed.dst]);
    }
  }
  if (auto cycle = find_cycle(n, edges)) {
    const Edge& ed = edges[cycle->front()];
    throw ValidationError("cycle through edge " + names[ed.src] + " -> " +
                          names[ed.dst]);
  }

  dag.out_.assign(n, {});
  dag.in_.assign(n, {});
  for (EdgeId e = 0; e < edges.size(); ++e) {
    dag.out_[edges[e].src].push_back(e);
    dag.in_[edges[e].dst].push_back(e);
  }
  dag.roles_.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    if (dag.in_[v].empty()) {
      dag.roles_[v] = NodeRole::Source;
    } else if (dag.out_[v].empty()) {
      dag.roles_[v] = NodeRole::Sink;
    } else {
      dag.roles_[v] = NodeRole::Internal;
    }
  }
  dag.names_ = std::move(names);
  dag.edges_ = std::move(edges);
  return dag;
}

std::optional<NodeId> Dag::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Dag::find_edge(NodeId src, NodeId dst) const {
  for (EdgeId e : out_edges(src)) {
    if (edges_[e].dst == dst) return e;
  }
  return std::nullopt;
}

std::vector<NodeId> Dag::sources() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (roles_[v] == NodeRole::Source) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> Dag::sinks() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (roles_[v] == NodeRole::Sink) out.push_back(v);
  }
  return out;
}

bool Dag::is_one_level() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return in_[e.src].empty() && out_[e.dst].empty();
  });
}

std::optional<std::vector<EdgeId>> find_cycle(std::size_t node_count,
                                              std::span<const Edge> edges) {
  std::vector<std::vector<EdgeId>> out(node_count);
  for (EdgeId e = 0; e < edges.size(); ++e) out[edges[e].src].push_back(e);

  // Iterative DFS; an edge into a grey node closes a cycle.
  enum : unsigned char { White, Grey, Black };
  std::vector<unsigned char> color(node_count, White);
  std::vector<EdgeId> via(node_count, 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;

  for (NodeId root = 0; root < node_count; ++root) {
    if (color[root] != White) continue;
    color[root] = Grey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == out[v].size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      const EdgeId e = out[v][next++];
      const NodeId w = edges[e].dst;
      if (color[w] == White) {
        color[w] = Grey;
        via[w] = e;
        stack.emplace_back(w, 0);
      } else if (color[w] == Grey) {
        std::vector<EdgeId> cycle{e};
        for (NodeId u = edges[e].src; u != w; u = edges[via[u]].src) {
          cycle.push_back(via[u]);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

std::vector<NodeId> topological_order(const Dag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<std::size_t> indeg(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    indeg[v] = dag.in_degree(v);
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (EdgeId e : dag.out_edges(order[head])) {
      const NodeId w = dag.edge(e).dst;
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  return order;
}

}  // namespace pebble

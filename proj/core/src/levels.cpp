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

#include "pebble/levels.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pebble/error.hpp"

namespace pebble {

LeveledDag compute_levels(const Dag& dag) {
  LeveledDag out;
  out.base = dag;
  out.node_level.assign(dag.node_count(), 0);
  for (NodeId v : topological_order(dag)) {
    for (EdgeId e : dag.out_edges(v)) {
      const NodeId w = dag.edge(e).dst;
      out.node_level[w] = std::max(out.node_level[w], out.node_level[v] + 1);
    }
  }
  for (EdgeId e = 0; e < dag.edge_count(); ++e) {
    const Edge& ed = dag.edge(e);
    if (out.node_level[ed.dst] != out.node_level[ed.src] + 1) {
      throw ValidationError("DAG is not leveled: edge " + dag.name(ed.src) + " -> " +
                            dag.name(ed.dst) + " spans levels " +
                            std::to_string(out.node_level[ed.src]) + " to " +
                            std::to_string(out.node_level[ed.dst]));
    }
  }
  if (dag.empty()) return out;

  out.k = *std::max_element(out.node_level.begin(), out.node_level.end()) + 1;
  std::vector<std::vector<EdgeId>> by_level(out.k - 1);
  for (EdgeId e = 0; e < dag.edge_count(); ++e) {
    by_level[out.node_level[dag.edge(e).src]].push_back(e);
  }

  for (const auto& edge_ids : by_level) {
    Level level;
    std::unordered_map<NodeId, NodeId> local;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto intern = [&](NodeId v) {
      auto [it, inserted] = local.emplace(v, level.base_node.size());
      if (inserted) {
        level.base_node.push_back(v);
        names.push_back(dag.name(v));
      }
      return it->second;
    };
    for (EdgeId e : edge_ids) {
      const Edge& ed = dag.edge(e);
      const NodeId s = intern(ed.src);
      const NodeId t = intern(ed.dst);
      edges.push_back(Edge{s, t});
      level.base_edge.push_back(e);
    }
    level.dag = Dag::create(std::move(names), std::move(edges));
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace pebble

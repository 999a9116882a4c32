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

#include "pebble/conflict_graph.hpp"

#include <sstream>

#include "json.hpp"

namespace pebble {

ConflictGraph::ConflictGraph(const Dag& dag, CostModel model)
    : dag_(&dag), edges_(dag.edges()), model_(model) {
  if (!dag.is_one_level()) {
    throw ValidationError(
        "conflict graph needs a one-level DAG (every edge from a source to a sink)");
  }
}

int conflict_weight(const Dag& dag, EdgeId a, EdgeId b, CostModel model) {
  return ConflictGraph(dag, model).weight(a, b);
}

Cost path_cost(const ConflictGraph& cg, std::span<const EdgeId> order) {
  Cost total = 0;
  for (std::size_t i = 1; i < order.size(); ++i) total += cg.weight(order[i - 1], order[i]);
  return total;
}

HamPath make_path(const ConflictGraph& cg, std::vector<EdgeId> order) {
  if (order.size() != cg.size()) {
    throw ValidationError("path visits " + std::to_string(order.size()) + " of " +
                          std::to_string(cg.size()) + " edges");
  }
  std::vector<char> seen(cg.size(), 0);
  for (EdgeId e : order) {
    if (e >= cg.size() || seen[e]) {
      throw ValidationError("path is not a permutation of the edge set");
    }
    seen[e] = 1;
  }
  HamPath path{std::move(order), 0};
  path.cost = path_cost(cg, path.order);
  return path;
}

Strategy path_to_strategy(const Dag& dag, const HamPath& path, CostModel model) {
  const ConflictGraph cg(dag, model);
  const HamPath checked = make_path(cg, path.order);
  if (checked.order.empty()) throw ValidationError("cannot build a strategy from an empty path");

  Strategy s{model, {}};
  auto& mv = s.moves;
  const Edge& first = dag.edge(checked.order.front());
  mv.push_back(Move::place(first.dst));
  mv.push_back(Move::place(first.src));

  for (std::size_t i = 1; i < checked.order.size(); ++i) {
    const Edge& a = dag.edge(checked.order[i - 1]);
    const Edge& b = dag.edge(checked.order[i]);
    if (a.dst == b.dst) {
      mv.push_back(Move::remove(a.src));
      mv.push_back(Move::place(b.src));
    } else if (a.src == b.src) {
      if (model == CostModel::Fused) {
        mv.push_back(Move::fused(a.dst, b.dst));
      } else {
        mv.push_back(Move::store(a.dst));
        mv.push_back(Move::remove(a.dst));
        mv.push_back(Move::place(b.dst));
      }
    } else if (model == CostModel::Fused) {
      // Fusing the store with the source load keeps the two cached words
      // sources for a moment, so no other edge can fire on the way.
      mv.push_back(Move::fused(a.dst, b.src));
      mv.push_back(Move::remove(a.src));
      mv.push_back(Move::place(b.dst));
    } else {
      mv.push_back(Move::store(a.dst));
      mv.push_back(Move::remove(a.dst));
      mv.push_back(Move::remove(a.src));
      mv.push_back(Move::place(b.src));
      mv.push_back(Move::place(b.dst));
    }
  }
  mv.push_back(Move::store(dag.edge(checked.order.back()).dst));
  return s;
}

HamPath strategy_to_path(const Dag& dag, const Strategy& strategy) {
  const ConflictGraph cg(dag, strategy.model);
  const SimulationResult run = simulate(dag, strategy, 2);
  for (std::size_t i = 0; i < run.deleted_per_move.size(); ++i) {
    if (run.deleted_per_move[i] > 1) {
      throw ValidationError("move " + std::to_string(i) + " deletes " +
                            std::to_string(run.deleted_per_move[i]) +
                            " edges at once; not a path strategy");
    }
  }
  return make_path(cg, run.deletion_order);
}

DepotGraph::DepotGraph(const ConflictGraph& base) : base_(&base) {}

DepotGraph augment_with_depot(const ConflictGraph& cg) {
  if (cg.size() == 0) throw ValidationError("cannot add a depot to an empty conflict graph");
  return DepotGraph(cg);
}

std::string to_json(const ConflictGraph& cg) {
  nlohmann::ordered_json doc;
  doc["m"] = cg.size();
  doc["model"] = to_string(cg.model());
  auto& weights = doc["weights"] = nlohmann::ordered_json::array();
  for (EdgeId i = 0; i < cg.size(); ++i) {
    for (EdgeId j = i + 1; j < cg.size(); ++j) weights.push_back({i, j, cg.weight(i, j)});
  }
  return doc.dump();
}

std::string to_dot(const ConflictGraph& cg) {
  const Dag& dag = cg.dag();
  std::ostringstream out;
  out << "graph conflict {\n";
  for (EdgeId i = 0; i < cg.size(); ++i) {
    const Edge& e = dag.edge(i);
    out << "  e" << i << " [label=\"" << dag.name(e.src) << "->" << dag.name(e.dst) << "\"];\n";
  }
  for (EdgeId i = 0; i < cg.size(); ++i) {
    for (EdgeId j = i + 1; j < cg.size(); ++j) {
      const int w = cg.weight(i, j);
      out << "  e" << i << " -- e" << j << " [label=\"" << w << "\"";
      if (w == cg.max_weight()) out << ", style=dashed";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pebble

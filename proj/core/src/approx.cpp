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

#include "pebble/approx.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <tuple>

#include "pebble/error.hpp"
#include "pebble/exact.hpp"

namespace pebble {

SpanningTree mst(const ConflictGraph& cg) {
  const std::size_t m = cg.size();
  if (m == 0) throw ValidationError("spanning tree of an empty graph");

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<char> in_tree(m, 0);
  std::vector<int> key(m, kInf);
  std::vector<std::size_t> link(m, 0);
  auto pair_of = [](std::size_t a, std::size_t b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };

  SpanningTree tree;
  in_tree[0] = 1;
  for (std::size_t v = 1; v < m; ++v) {
    key[v] = cg.weight(0, v);
    link[v] = 0;
  }
  for (std::size_t added = 1; added < m; ++added) {
    std::size_t pick = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (in_tree[v]) continue;
      if (pick == m || key[v] < key[pick] ||
          (key[v] == key[pick] && pair_of(link[v], v) < pair_of(link[pick], pick))) {
        pick = v;
      }
    }
    in_tree[pick] = 1;
    tree.edges.emplace_back(link[pick], pick);
    tree.weight += key[pick];
    for (std::size_t v = 0; v < m; ++v) {
      if (in_tree[v]) continue;
      const int w = cg.weight(pick, v);
      if (w < key[v] || (w == key[v] && pair_of(pick, v) < pair_of(link[v], v))) {
        key[v] = w;
        link[v] = pick;
      }
    }
  }
  return tree;
}

std::vector<std::size_t> odd_degree_vertices(const SpanningTree& tree, std::size_t vertex_count) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [a, b] : tree.edges) {
    ++degree.at(a);
    ++degree.at(b);
  }
  std::vector<std::size_t> odd;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (degree[v] % 2 == 1) odd.push_back(v);
  }
  return odd;
}

Matching min_cost_perfect_matching(const ConflictGraph& cg, std::span<const std::size_t> odd) {
  const std::size_t k = odd.size();
  if (k % 2 != 0) {
    throw ValidationError("perfect matching needs an even vertex set, got " + std::to_string(k));
  }
  if (k > kMatchingLimit) throw SizeGuardError("matching vertex set too large", k, kMatchingLimit);
  Matching result;
  if (k == 0) return result;

  std::vector<std::uint8_t> w(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) w[i * k + j] = static_cast<std::uint8_t>(cg.weight(odd[i], odd[j]));
    }
  }

  // rest[mask]: cheapest matching of the vertices outside mask. Masks are
  // visited from the top so every successor (a superset) is already final.
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::uint16_t> rest(full + 1, kInf);
  std::vector<std::uint8_t> partner(full + 1, 0);
  rest[full] = 0;
  for (std::size_t mask = full; mask-- > 0;) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::size_t i = 0;
    while (mask & (std::size_t{1} << i)) ++i;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t to = mask | (std::size_t{1} << i) | (std::size_t{1} << j);
      if (rest[to] == kInf) continue;
      const auto cand = static_cast<std::uint16_t>(rest[to] + w[i * k + j]);
      if (cand < rest[mask]) {
        rest[mask] = cand;
        partner[mask] = static_cast<std::uint8_t>(j);
      }
    }
  }

  result.weight = rest[0];
  for (std::size_t mask = 0; mask != full;) {
    std::size_t i = 0;
    while (mask & (std::size_t{1} << i)) ++i;
    const std::size_t j = partner[mask];
    result.pairs.emplace_back(std::min(odd[i], odd[j]), std::max(odd[i], odd[j]));
    mask |= (std::size_t{1} << i) | (std::size_t{1} << j);
  }
  return result;
}

EulerMultigraph merge(const SpanningTree& tree, const Matching& matching, std::size_t vertex_count) {
  EulerMultigraph f{vertex_count, tree.edges};
  f.edges.insert(f.edges.end(), matching.pairs.begin(), matching.pairs.end());
  return f;
}

std::vector<std::size_t> euler_tour(const EulerMultigraph& f) {
  const std::size_t n = f.vertex_count;
  if (n == 0) throw ValidationError("Euler tour of an empty multigraph");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto [a, b] = f.edges[e];
    if (a >= n || b >= n) throw ValidationError("multigraph edge out of range");
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() % 2 != 0) {
      throw ValidationError("vertex " + std::to_string(v) + " has odd degree");
    }
    if (n > 1 && adj[v].empty()) {
      throw ValidationError("multigraph is disconnected: vertex " + std::to_string(v) +
                            " is isolated");
    }
  }
  if (f.edges.empty()) return {0};

  std::vector<char> used(f.edges.size(), 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> walk;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
    if (next[v] == adj[v].size()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      const auto [to, e] = adj[v][next[v]];
      used[e] = 1;
      stack.push_back(to);
    }
  }
  if (walk.size() != f.edges.size() + 1) {
    throw ValidationError("multigraph is disconnected");
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

ChristofidesResult christofides(const ConflictGraph& cg) {
  const std::size_t m = cg.size();
  ChristofidesResult r;
  r.tree = mst(cg);
  r.odd = odd_degree_vertices(r.tree, m);
  r.matching = min_cost_perfect_matching(cg, r.odd);
  r.multigraph_weight = r.tree.weight + r.matching.weight;
  r.euler = euler_tour(merge(r.tree, r.matching, m));

  std::vector<char> seen(m, 0);
  for (std::size_t v : r.euler) {
    if (!seen[v]) {
      seen[v] = 1;
      r.cycle.push_back(v);
    }
  }

  if (m == 1) {
    r.path = make_path(cg, r.cycle);
    return r;
  }
  // Edge i of the cycle joins cycle[i] and cycle[i + 1 mod m].
  std::size_t drop = 0;
  int heaviest = -1;
  for (std::size_t i = 0; i < m; ++i) {
    const int w = cg.weight(r.cycle[i], r.cycle[(i + 1) % m]);
    r.cycle_weight += w;
    if (w > heaviest) {
      heaviest = w;
      drop = i;
    }
  }
  r.closing_edge_path_weight = r.cycle_weight - cg.weight(r.cycle[m - 1], r.cycle[0]);

  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) order.push_back(r.cycle[(drop + k) % m]);
  r.path = make_path(cg, std::move(order));
  return r;
}

HamPath christofides_path(const ConflictGraph& cg) { return christofides(cg).path; }

MultiLevelResult multi_level_solve(const LeveledDag& ld, const PathSolver& solver,
                                   CostModel model) {
  MultiLevelResult result;
  result.strategy.model = model;
  for (std::size_t i = 0; i < ld.levels.size(); ++i) {
    const Level& level = ld.levels[i];
    if (level.dag.edge_count() == 0) {
      result.level_costs.push_back(0);
      continue;
    }
    const ConflictGraph cg(level.dag, model);
    const HamPath path = solver(cg);
    const Strategy local = path_to_strategy(level.dag, path, model);
    const Cost cost = simulate(level.dag, local, 2).cost;
    result.level_costs.push_back(cost);
    result.total_cost += cost;

    for (Move mv : local.moves) {
      mv.v = level.base_node[mv.v];
      if (mv.kind == MoveKind::FusedSwap) mv.w = level.base_node[mv.w];
      result.strategy.moves.push_back(mv);
    }
    // The level ends with both words of its last edge cached and clean.
    if (i + 1 < ld.levels.size()) {
      const Edge& last = level.dag.edge(path.order.back());
      result.strategy.moves.push_back(Move::remove(level.base_node[last.src]));
      result.strategy.moves.push_back(Move::remove(level.base_node[last.dst]));
    }
  }
  return result;
}

LevelLowerBound multi_level_lower_bound(const LeveledDag& ld, CostModel model) {
  LevelLowerBound bound;
  Cost sum = 0;
  for (const Level& level : ld.levels) {
    if (level.dag.edge_count() == 0) {
      bound.level_opt.push_back(0);
      continue;
    }
    const ConflictGraph cg(level.dag, model);
    const Cost opt = held_karp_path(cg).cost + 3;
    bound.level_opt.push_back(opt);
    sum += opt;
  }
  if (!ld.levels.empty()) {
    bound.lower_bound = static_cast<double>(sum) / static_cast<double>(ld.levels.size());
  }
  return bound;
}

}  // namespace pebble

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

#include "pebble/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "pebble/error.hpp"

namespace pebble {

HamPath held_karp_path(const ConflictGraph& cg) {
  const std::size_t m = cg.size();
  if (m == 0) throw ValidationError("Held-Karp needs at least one vertex");
  if (m > kHeldKarpLimit) {
    throw SizeGuardError("Held-Karp conflict graph too large", m, kHeldKarpLimit);
  }

  std::vector<std::uint8_t> w(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) w[i * m + j] = static_cast<std::uint8_t>(cg.weight(i, j));
    }
  }

  // Path costs stay below 3 * 20, so a byte holds them.
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::uint8_t> best((full + 1) * m, kInf);
  std::vector<std::uint8_t> parent((full + 1) * m, 0);
  for (std::size_t e = 0; e < m; ++e) best[(std::size_t{1} << e) * m + e] = 0;

  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < m; ++last) {
      const std::uint8_t here = best[mask * m + last];
      if (here == kInf) continue;
      for (std::size_t next = 0; next < m; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t to = (mask | (std::size_t{1} << next)) * m + next;
        const auto cand = static_cast<std::uint8_t>(here + w[last * m + next]);
        if (cand < best[to]) {
          best[to] = cand;
          parent[to] = static_cast<std::uint8_t>(last);
        }
      }
    }
  }

  std::size_t last = 0;
  for (std::size_t e = 1; e < m; ++e) {
    if (best[full * m + e] < best[full * m + last]) last = e;
  }
  HamPath path;
  path.cost = best[full * m + last];
  std::size_t mask = full;
  path.order.reserve(m);
  for (;;) {
    path.order.push_back(last);
    if (mask == (std::size_t{1} << last)) break;
    const std::size_t prev = parent[mask * m + last];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  std::reverse(path.order.begin(), path.order.end());
  return path;
}

Tour exhaustive_tour(const DepotGraph& dg) {
  const std::size_t m = dg.base().size();
  if (m > kTourLimit) throw SizeGuardError("tour enumeration too large", m, kTourLimit);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);

  Tour best{{}, std::numeric_limits<Cost>::max()};
  do {
    Cost c = dg.weight(dg.depot(), perm.front()) + dg.weight(perm.back(), dg.depot());
    for (std::size_t i = 1; i < m; ++i) c += dg.weight(perm[i - 1], perm[i]);
    if (c < best.cost) {
      best.cost = c;
      best.order.assign(1, dg.depot());
      best.order.insert(best.order.end(), perm.begin(), perm.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// 2 bits of colour per node followed by one bit per remaining edge. With the
// size limits this fits 36 bits.
std::uint64_t encode(const GameState& s, std::size_t n, std::size_t m) {
  std::uint64_t key = 0;
  for (NodeId v = 0; v < n; ++v) {
    const auto p = s.pebble(v);
    const std::uint64_t c = !p ? 0 : *p == PebbleColor::Red ? 1 : 2;
    key |= c << (2 * v);
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (s.has_edge(e)) key |= std::uint64_t{1} << (2 * n + e);
  }
  return key;
}

bool live(const Dag& dag, const GameState& s, NodeId v) {
  auto any = [&](std::span<const EdgeId> edges) {
    return std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return s.has_edge(e); });
  };
  return any(dag.in_edges(v)) || any(dag.out_edges(v));
}

}  // namespace

SearchResult state_space_opt(const Dag& dag, std::size_t capacity, CostModel model) {
  const std::size_t n = dag.node_count();
  const std::size_t m = dag.edge_count();
  if (n > kStateSpaceNodeLimit) {
    throw SizeGuardError("state-space search: too many nodes", n, kStateSpaceNodeLimit);
  }
  if (m > kStateSpaceEdgeLimit) {
    throw SizeGuardError("state-space search: too many edges", m, kStateSpaceEdgeLimit);
  }

  struct Node {
    GameState state;
    std::size_t parent;
    Move via;
    bool settled;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<std::size_t>> buckets(1);

  nodes.push_back({GameState(dag, capacity), 0, Move{}, false});
  index.emplace(encode(nodes[0].state, n, m), 0);
  buckets[0].push_back(0);

  SearchResult result;
  result.strategy.model = model;
  for (std::size_t c = 0; c < buckets.size(); ++c) {
    // Zero-cost successors are appended to the bucket being scanned.
    for (std::size_t head = 0; head < buckets[c].size(); ++head) {
      const std::size_t id = buckets[c][head];
      if (nodes[id].settled || static_cast<std::size_t>(nodes[id].state.cost()) != c) continue;
      nodes[id].settled = true;
      ++result.states_settled;

      if (nodes[id].state.is_terminal()) {
        result.cost = nodes[id].state.cost();
        for (std::size_t at = id; at != 0; at = nodes[at].parent) {
          result.strategy.moves.push_back(nodes[at].via);
        }
        std::reverse(result.strategy.moves.begin(), result.strategy.moves.end());
        return result;
      }

      const GameState here = nodes[id].state;
      for (const Move& mv : legal_moves(dag, here, model)) {
        if (mv.kind == MoveKind::RedToBlue) continue;
        if (mv.kind == MoveKind::PlaceRed && !live(dag, here, mv.v)) continue;
        if (mv.kind == MoveKind::FusedSwap && !live(dag, here, mv.w)) continue;

        GameState next = apply_move(dag, here, mv, model);
        const auto cost = static_cast<std::size_t>(next.cost());
        const std::uint64_t key = encode(next, n, m);
        auto [it, inserted] = index.emplace(key, nodes.size());
        if (inserted) {
          nodes.push_back({std::move(next), id, mv, false});
        } else {
          Node& old = nodes[it->second];
          if (old.settled || old.state.cost() <= next.cost()) continue;
          old.state = std::move(next);
          old.parent = id;
          old.via = mv;
        }
        if (buckets.size() <= cost) buckets.resize(cost + 1);
        buckets[cost].push_back(it->second);
      }
    }
  }
  throw ValidationError("no terminal state is reachable with M=" + std::to_string(capacity));
}

}  // namespace pebble

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

#include "pebble/game.hpp"

#include <algorithm>
#include <limits>

#include "pebble/error.hpp"

namespace pebble {

std::string_view to_string(CostModel model) {
  return model == CostModel::Fused ? "fused" : "standard";
}

CostModel parse_cost_model(std::string_view text) {
  if (text == "standard") return CostModel::Standard;
  if (text == "fused") return CostModel::Fused;
  throw ValidationError("unknown cost model '" + std::string(text) + "'");
}

std::string_view to_string(Instruction::Op op) {
  switch (op) {
    case Instruction::Op::Load:
      return "LOAD";
    case Instruction::Op::Remove:
      return "REMOVE";
    case Instruction::Op::Store:
      return "STORE";
    case Instruction::Op::Compute:
      return "COMPUTE";
  }
  return "?";
}

std::string describe(const Move& move, const Dag& dag) {
  auto n = [&](NodeId v) { return v < dag.node_count() ? dag.name(v) : std::to_string(v); };
  switch (move.kind) {
    case MoveKind::PlaceRed:
      return "place " + n(move.v);
    case MoveKind::RemoveRed:
      return "remove " + n(move.v);
    case MoveKind::RedToBlue:
      return "to_blue " + n(move.v);
    case MoveKind::BlueToRed:
      return "store " + n(move.v);
    case MoveKind::FusedSwap:
      return "fused " + n(move.v) + " " + n(move.w);
  }
  return "?";
}

Cost Strategy::nominal_cost() const {
  Cost total = 0;
  for (const Move& m : moves) total += m.cost();
  return total;
}

GameState::GameState(const Dag& dag, std::size_t capacity)
    : color_(dag.node_count(), kNone),
      remaining_(dag.edge_count(), 1),
      in_remaining_(dag.node_count(), 0),
      remaining_count_(dag.edge_count()),
      capacity_(capacity) {
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    in_remaining_[v] = static_cast<std::uint32_t>(dag.in_degree(v));
  }
}

std::optional<PebbleColor> GameState::pebble(NodeId v) const {
  switch (color_.at(v)) {
    case kRed:
      return PebbleColor::Red;
    case kBlue:
      return PebbleColor::Blue;
    default:
      return std::nullopt;
  }
}

// Mutating operations on GameState, shared by the pure API and the replay loop.
class GameEngine {
 public:
  static std::optional<std::string> check(const Dag& dag, const GameState& s,
                                          const Move& m, CostModel model) {
    auto in_range = [&](NodeId v) { return v < dag.node_count(); };
    if (!in_range(m.v) || (m.kind == MoveKind::FusedSwap && !in_range(m.w))) {
      return std::string("unknown vertex");
    }
    const auto name = [&](NodeId v) { return "'" + dag.name(v) + "'"; };
    switch (m.kind) {
      case MoveKind::PlaceRed:
        if (s.color_[m.v] != GameState::kNone) {
          return "R1: vertex " + name(m.v) + " already holds a pebble";
        }
        if (s.pebbles_ >= s.capacity_) {
          return "R5: capacity M=" + std::to_string(s.capacity_) + " reached";
        }
        return std::nullopt;
      case MoveKind::RemoveRed:
      case MoveKind::RedToBlue:
        if (s.color_[m.v] != GameState::kRed) {
          return "R2: vertex " + name(m.v) + " holds no red pebble";
        }
        return std::nullopt;
      case MoveKind::BlueToRed:
        if (s.color_[m.v] != GameState::kBlue) {
          return "R3: vertex " + name(m.v) + " holds no blue pebble";
        }
        return std::nullopt;
      case MoveKind::FusedSwap:
        if (model != CostModel::Fused) {
          return std::string("fused move is not available in the standard model");
        }
        if (s.color_[m.v] != GameState::kBlue) {
          return "fused: vertex " + name(m.v) + " holds no blue pebble";
        }
        if (m.v == m.w || s.color_[m.w] != GameState::kNone) {
          return "fused: vertex " + name(m.w) + " already holds a pebble";
        }
        return std::nullopt;
    }
    return std::string("unknown move kind");
  }

  // Applies a move assumed legal. Returns the vertex that received a new
  // pebble, if any, so the closure can start from its edges.
  static std::optional<NodeId> apply(GameState& s, const Move& m) {
    switch (m.kind) {
      case MoveKind::PlaceRed:
        s.color_[m.v] = GameState::kRed;
        ++s.pebbles_;
        s.cost_ += 1;
        return m.v;
      case MoveKind::RemoveRed:
        s.color_[m.v] = GameState::kNone;
        --s.pebbles_;
        return std::nullopt;
      case MoveKind::RedToBlue:
        s.color_[m.v] = GameState::kBlue;
        ++s.blues_;
        return std::nullopt;
      case MoveKind::BlueToRed:
        s.color_[m.v] = GameState::kRed;
        --s.blues_;
        s.cost_ += 1;
        return std::nullopt;
      case MoveKind::FusedSwap:
        s.color_[m.v] = GameState::kNone;
        --s.blues_;
        s.color_[m.w] = GameState::kRed;
        s.cost_ += 1;
        return m.w;
    }
    return std::nullopt;
  }

  static bool enabled(const Dag& dag, const GameState& s, EdgeId e) {
    const Edge& ed = dag.edge(e);
    return s.remaining_[e] && s.in_remaining_[ed.src] == 0 &&
           s.color_[ed.src] != GameState::kNone && s.color_[ed.dst] != GameState::kNone;
  }

  static void fire(const Dag& dag, GameState& s, EdgeId e) {
    const NodeId v = dag.edge(e).dst;
    s.remaining_[e] = 0;
    --s.remaining_count_;
    --s.in_remaining_[v];
    if (s.color_[v] != GameState::kBlue) {
      s.color_[v] = GameState::kBlue;
      ++s.blues_;
    }
  }

  // Worklist closure. Deleting (u, v) can only enable out-edges of v, so the
  // candidates grow from the seed set alone.
  static void close(const Dag& dag, GameState& s, std::vector<EdgeId> work,
                    std::vector<EdgeId>* fired) {
    for (std::size_t head = 0; head < work.size(); ++head) {
      const EdgeId e = work[head];
      if (!enabled(dag, s, e)) continue;
      fire(dag, s, e);
      if (fired) fired->push_back(e);
      const NodeId v = dag.edge(e).dst;
      if (s.in_remaining_[v] == 0) {
        for (EdgeId out : dag.out_edges(v)) work.push_back(out);
      }
    }
  }

  static std::vector<EdgeId> seeds(const Dag& dag, NodeId v) {
    std::vector<EdgeId> work(dag.in_edges(v).begin(), dag.in_edges(v).end());
    work.insert(work.end(), dag.out_edges(v).begin(), dag.out_edges(v).end());
    return work;
  }

  static void step(const Dag& dag, GameState& s, const Move& m, CostModel model,
                   std::size_t index, std::vector<EdgeId>* fired) {
    if (auto why = check(dag, s, m, model)) throw IllegalMoveError(index, *why);
    if (auto placed = apply(s, m)) close(dag, s, seeds(dag, *placed), fired);
  }
};

std::optional<std::string> check_move(const Dag& dag, const GameState& state,
                                      const Move& move, CostModel model) {
  return GameEngine::check(dag, state, move, model);
}

GameState apply_move(const Dag& dag, const GameState& state, const Move& move,
                     CostModel model) {
  GameState next = state;
  GameEngine::step(dag, next, move, model, 0, nullptr);
  return next;
}

GameState apply_move(const Dag& dag, const GameState& state, const Move& move,
                     CostModel model, std::vector<EdgeId>& fired) {
  GameState next = state;
  GameEngine::step(dag, next, move, model, 0, &fired);
  return next;
}

GameState closure_r4(const Dag& dag, GameState state) {
  std::vector<EdgeId> all(dag.edge_count());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  GameEngine::close(dag, state, std::move(all), nullptr);
  return state;
}

GameState closure_r4(const Dag& dag, GameState state, std::span<const EdgeId> priority) {
  for (;;) {
    auto it = std::find_if(priority.begin(), priority.end(), [&](EdgeId e) {
      return GameEngine::enabled(dag, state, e);
    });
    if (it == priority.end()) return state;
    GameEngine::fire(dag, state, *it);
  }
}

std::vector<Move> legal_moves(const Dag& dag, const GameState& state, CostModel model) {
  std::vector<Move> moves;
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    for (const Move m : {Move::place(v), Move::remove(v), Move::to_blue(v), Move::store(v)}) {
      if (!GameEngine::check(dag, state, m, model)) moves.push_back(m);
    }
  }
  if (model == CostModel::Fused) {
    for (NodeId v = 0; v < dag.node_count(); ++v) {
      if (state.pebble(v) != PebbleColor::Blue) continue;
      for (NodeId w = 0; w < dag.node_count(); ++w) {
        if (!state.has_pebble(w)) moves.push_back(Move::fused(v, w));
      }
    }
  }
  return moves;
}

SimulationResult simulate(const Dag& dag, const Strategy& strategy, std::size_t capacity) {
  SimulationResult result;
  GameState state(dag, capacity);
  std::vector<EdgeId> fired;
  using Op = Instruction::Op;

  for (std::size_t i = 0; i < strategy.moves.size(); ++i) {
    const Move& m = strategy.moves[i];
    fired.clear();
    GameEngine::step(dag, state, m, strategy.model, i, &fired);

    switch (m.kind) {
      case MoveKind::PlaceRed:
        result.trace.push_back({Op::Load, m.v, 0, i, false});
        break;
      case MoveKind::RemoveRed:
        result.trace.push_back({Op::Remove, m.v, 0, i, false});
        break;
      case MoveKind::RedToBlue:
        // Pure recolouring; no machine instruction corresponds to it.
        break;
      case MoveKind::BlueToRed:
        result.trace.push_back({Op::Store, m.v, 0, i, false});
        break;
      case MoveKind::FusedSwap:
        result.trace.push_back({Op::Store, m.v, 0, i, true});
        result.trace.push_back({Op::Remove, m.v, 0, i, true});
        result.trace.push_back({Op::Load, m.w, 0, i, true});
        break;
    }
    for (EdgeId e : fired) {
      result.trace.push_back({Op::Compute, dag.edge(e).dst, e, i, false});
      result.deletion_order.push_back(e);
    }
    result.deleted_per_move.push_back(fired.size());
  }

  if (!state.is_terminal()) {
    throw NonTerminalError("strategy ends with " +
                           std::to_string(state.remaining_edge_count()) +
                           " edge(s) remaining and " + std::to_string(state.blue_count()) +
                           " unstored result(s)");
  }
  result.cost = state.cost();
  return result;
}

Strategy fuse_strategy(const Strategy& strategy) {
  Strategy out{CostModel::Fused, {}};
  const auto& mv = strategy.moves;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (i + 2 < mv.size() && mv[i].kind == MoveKind::BlueToRed &&
        mv[i + 1].kind == MoveKind::RemoveRed && mv[i + 1].v == mv[i].v &&
        mv[i + 2].kind == MoveKind::PlaceRed && mv[i + 2].v != mv[i].v) {
      out.moves.push_back(Move::fused(mv[i].v, mv[i + 2].v));
      i += 2;
    } else {
      out.moves.push_back(mv[i]);
    }
  }
  return out;
}

}  // namespace pebble

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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/dag.hpp"

namespace pebble {

using Cost = std::int64_t;

/// Blue marks a word modified in cache and not yet written back; red marks a
/// clean cached word.
enum class PebbleColor : std::uint8_t { Red, Blue };

/// Standard: every LOAD and every STORE costs one. Fused: a STORE of one word
/// and a LOAD of another may be issued together for a cost of one.
enum class CostModel { Standard, Fused };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

enum class MoveKind : std::uint8_t {
  PlaceRed,   ///< R1, LOAD, cost 1
  RemoveRed,  ///< R2, REMOVE, cost 0
  RedToBlue,  ///< R2, cost 0; legal but never useful
  BlueToRed,  ///< R3, STORE, cost 1
  FusedSwap,  ///< STORE+REMOVE of v and LOAD of w as one instruction, cost 1
};

struct Move {
  MoveKind kind = MoveKind::PlaceRed;
  NodeId v = 0;
  NodeId w = 0;  ///< load target of a FusedSwap; unused otherwise

  static constexpr Move place(NodeId v) { return {MoveKind::PlaceRed, v, 0}; }
  static constexpr Move remove(NodeId v) { return {MoveKind::RemoveRed, v, 0}; }
  static constexpr Move to_blue(NodeId v) { return {MoveKind::RedToBlue, v, 0}; }
  static constexpr Move store(NodeId v) { return {MoveKind::BlueToRed, v, 0}; }
  static constexpr Move fused(NodeId store, NodeId load) {
    return {MoveKind::FusedSwap, store, load};
  }

  constexpr Cost cost() const {
    return kind == MoveKind::PlaceRed || kind == MoveKind::BlueToRed ||
                   kind == MoveKind::FusedSwap
               ? 1
               : 0;
  }

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind == b.kind && a.v == b.v &&
           (a.kind != MoveKind::FusedSwap || a.w == b.w);
  }
};

std::string describe(const Move& move, const Dag& dag);

struct Strategy {
  CostModel model = CostModel::Standard;
  std::vector<Move> moves;

  /// Sum of move costs, without replaying.
  Cost nominal_cost() const;
};

/// One configuration of the game on a fixed DAG with M pebbles.
class GameState {
 public:
  /// Empty board: no pebbles, every edge remaining, zero cost.
  GameState(const Dag& dag, std::size_t capacity);

  std::optional<PebbleColor> pebble(NodeId v) const;
  bool has_pebble(NodeId v) const { return color_.at(v) != kNone; }
  std::size_t pebble_count() const noexcept { return pebbles_; }
  std::size_t blue_count() const noexcept { return blues_; }
  std::size_t capacity() const noexcept { return capacity_; }
  Cost cost() const noexcept { return cost_; }

  bool has_edge(EdgeId e) const { return remaining_.at(e) != 0; }
  std::size_t remaining_edge_count() const noexcept { return remaining_count_; }
  /// In-degree of v counting only remaining edges; 0 makes v a leaf.
  std::size_t remaining_in_degree(NodeId v) const { return in_remaining_.at(v); }
  bool is_leaf(NodeId v) const { return in_remaining_.at(v) == 0; }

  /// No edges left and every result written back.
  bool is_terminal() const noexcept { return remaining_count_ == 0 && blues_ == 0; }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend class GameEngine;

  static constexpr std::uint8_t kNone = 0;
  static constexpr std::uint8_t kRed = 1;
  static constexpr std::uint8_t kBlue = 2;

  std::vector<std::uint8_t> color_;
  std::vector<std::uint8_t> remaining_;
  std::vector<std::uint32_t> in_remaining_;
  std::size_t pebbles_ = 0;
  std::size_t blues_ = 0;
  std::size_t remaining_count_ = 0;
  std::size_t capacity_ = 0;
  Cost cost_ = 0;
};

/// Checks the preconditions of `move` and returns a description of the
/// violated rule, or nullopt when the move is legal.
std::optional<std::string> check_move(const Dag& dag, const GameState& state,
                                      const Move& move, CostModel model);

/// Applies a legal move, adds its cost and runs the automatic edge deletion
/// to its fixed point. Throws IllegalMoveError (index 0) otherwise.
GameState apply_move(const Dag& dag, const GameState& state, const Move& move,
                     CostModel model);

/// Same as apply_move, also reporting the edges deleted by the closure in
/// firing order.
GameState apply_move(const Dag& dag, const GameState& state, const Move& move,
                     CostModel model, std::vector<EdgeId>& fired);

/// Deletes, until none is left, every remaining edge (u, v) whose tail u is a
/// leaf and whose endpoints both hold pebbles; each deletion turns v blue.
/// Zero cost.
GameState closure_r4(const Dag& dag, GameState state);

/// closure_r4 firing, at each step, the enabled edge that comes first in
/// `priority` (a permutation of all EdgeIds). The fixed point does not depend
/// on the order; this overload exists to check that.
GameState closure_r4(const Dag& dag, GameState state,
                     std::span<const EdgeId> priority);

/// Every move whose preconditions hold, grouped by vertex in ascending order:
/// place, remove, to_blue, store; fused swaps follow under the fused model.
std::vector<Move> legal_moves(const Dag& dag, const GameState& state, CostModel model);

/// Machine instruction produced by replaying a strategy.
struct Instruction {
  enum class Op : std::uint8_t { Load, Remove, Store, Compute };
  Op op = Op::Load;
  NodeId node = 0;         ///< Load/Remove/Store: the word; Compute: the output
  EdgeId edge = 0;         ///< Compute only
  std::size_t move = 0;    ///< index of the move that produced it
  bool fused = false;      ///< part of a fused STORE+LOAD instruction
};

std::string_view to_string(Instruction::Op op);

using InstructionTrace = std::vector<Instruction>;

struct SimulationResult {
  Cost cost = 0;
  InstructionTrace trace;
  /// Edges in deletion order.
  std::vector<EdgeId> deletion_order;
  /// Number of edges deleted by each move's closure.
  std::vector<std::size_t> deleted_per_move;
};

/// Replays a strategy from the empty board with M = capacity pebbles.
/// Throws IllegalMoveError carrying the move index, or NonTerminalError when
/// the final state still has edges or unstored blue pebbles.
SimulationResult simulate(const Dag& dag, const Strategy& strategy, std::size_t capacity);

/// Rewrites every adjacent store(v), remove(v), place(w) triple as
/// fused(v, w) and switches the model to Fused.
Strategy fuse_strategy(const Strategy& strategy);

}  // namespace pebble

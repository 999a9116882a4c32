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

#include <string>
#include <string_view>

#include "pebble/dag.hpp"
#include "pebble/game.hpp"

namespace pebble {

/// Parses {"model":"standard"|"fused","moves":[{"op":..,"v":..,"w":..}]}.
/// Ops are place, remove, to_blue, store and fused (v stored, w loaded).
/// Vertices may be given by name (string) or by NodeId (integer).
/// Throws ValidationError on malformed documents or unknown vertices.
Strategy strategy_from_json(std::string_view text, const Dag& dag);

/// Vertices are written by name.
std::string strategy_to_json(const Strategy& strategy, const Dag& dag);

/// [{"op":"LOAD","node":"y1","move":0}, {"op":"COMPUTE","edge":["x1","y1"],...}]
std::string trace_to_json(const InstructionTrace& trace, const Dag& dag);

/// One instruction per line, e.g. "LOAD y1" or "COMPUTE x1 -> y1".
std::string trace_to_text(const InstructionTrace& trace, const Dag& dag);

}  // namespace pebble

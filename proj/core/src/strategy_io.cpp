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

#include "pebble/strategy_io.hpp"

#include "json.hpp"
#include "pebble/error.hpp"

namespace pebble {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

NodeId resolve(const json& value, const Dag& dag, std::size_t index) {
  const std::string where = "move " + std::to_string(index) + ": ";
  if (value.is_string()) {
    if (auto v = dag.find(value.get<std::string>())) return *v;
    throw ValidationError(where + "unknown vertex '" + value.get<std::string>() + "'");
  }
  if (value.is_number_unsigned() || (value.is_number_integer() && value.get<long long>() >= 0)) {
    const auto v = value.get<std::size_t>();
    if (v < dag.node_count()) return v;
    throw ValidationError(where + "vertex id " + std::to_string(v) + " out of range");
  }
  throw ValidationError(where + "vertex must be a name or a non-negative id");
}

std::string_view op_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::PlaceRed:
      return "place";
    case MoveKind::RemoveRed:
      return "remove";
    case MoveKind::RedToBlue:
      return "to_blue";
    case MoveKind::BlueToRed:
      return "store";
    case MoveKind::FusedSwap:
      return "fused";
  }
  return "?";
}

}  // namespace

Strategy strategy_from_json(std::string_view text, const Dag& dag) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("strategy JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("moves") || !doc["moves"].is_array()) {
    throw ValidationError("strategy JSON: expected an object with a 'moves' array");
  }
  Strategy strategy;
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) throw ValidationError("strategy JSON: 'model' must be a string");
    strategy.model = parse_cost_model(doc["model"].get<std::string>());
  }
  std::size_t index = 0;
  for (const json& m : doc["moves"]) {
    if (!m.is_object() || !m.contains("op") || !m["op"].is_string() || !m.contains("v")) {
      throw ValidationError("move " + std::to_string(index) + ": expected {op, v[, w]}");
    }
    const std::string op = m["op"].get<std::string>();
    const NodeId v = resolve(m["v"], dag, index);
    if (op == "place") {
      strategy.moves.push_back(Move::place(v));
    } else if (op == "remove") {
      strategy.moves.push_back(Move::remove(v));
    } else if (op == "to_blue") {
      strategy.moves.push_back(Move::to_blue(v));
    } else if (op == "store") {
      strategy.moves.push_back(Move::store(v));
    } else if (op == "fused") {
      if (!m.contains("w")) {
        throw ValidationError("move " + std::to_string(index) + ": fused move needs 'w'");
      }
      strategy.moves.push_back(Move::fused(v, resolve(m["w"], dag, index)));
    } else {
      throw ValidationError("move " + std::to_string(index) + ": unknown op '" + op + "'");
    }
    ++index;
  }
  return strategy;
}

std::string strategy_to_json(const Strategy& strategy, const Dag& dag) {
  ojson doc;
  doc["model"] = to_string(strategy.model);
  auto& moves = doc["moves"] = ojson::array();
  for (const Move& m : strategy.moves) {
    ojson entry{{"op", op_name(m.kind)}, {"v", dag.name(m.v)}};
    if (m.kind == MoveKind::FusedSwap) entry["w"] = dag.name(m.w);
    moves.push_back(std::move(entry));
  }
  return doc.dump();
}

std::string trace_to_json(const InstructionTrace& trace, const Dag& dag) {
  ojson doc = ojson::array();
  for (const Instruction& ins : trace) {
    ojson entry{{"op", to_string(ins.op)}};
    if (ins.op == Instruction::Op::Compute) {
      const Edge& e = dag.edge(ins.edge);
      entry["edge"] = {dag.name(e.src), dag.name(e.dst)};
    } else {
      entry["node"] = dag.name(ins.node);
    }
    entry["move"] = ins.move;
    if (ins.fused) entry["fused"] = true;
    doc.push_back(std::move(entry));
  }
  return doc.dump();
}

std::string trace_to_text(const InstructionTrace& trace, const Dag& dag) {
  std::string out;
  for (const Instruction& ins : trace) {
    out += to_string(ins.op);
    out += ' ';
    if (ins.op == Instruction::Op::Compute) {
      const Edge& e = dag.edge(ins.edge);
      out += dag.name(e.src) + " -> " + dag.name(e.dst);
    } else {
      out += dag.name(ins.node);
    }
    if (ins.fused) out += " (fused)";
    out += '\n';
  }
  return out;
}

}  // namespace pebble

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

#include <cstdint>
#include <string>

#include "pebble/game.hpp"

namespace pebble::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSizeGuard = 3;
inline constexpr int kExitBoundViolation = 4;
inline constexpr int kExitIllegalMove = 5;
inline constexpr int kExitNonTerminal = 6;

enum class Solver { Exact, Christofides, MultiLevel };
enum class Format { Json, Csv, Dot, Text };

struct RunConfig {
  std::string input;
  std::string strategy;   // simulate
  std::string graph;      // gen gadget, reduce
  std::string out;        // empty: stdout
  std::size_t memory = 2;
  std::size_t line_size = 1;
  CostModel model = CostModel::Standard;
  bool both_models = false;  // bench
  Solver solver = Solver::Exact;
  std::uint64_t seed = 1;
  Format format = Format::Text;
  bool format_set = false;
  std::string what = "dag";  // export
  // gen random
  std::size_t sources = 4;
  std::size_t sinks = 4;
  double density = 0.5;
  std::size_t count = 1;
  // bench
  std::size_t jobs = 0;
};

int cmd_solve(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_gen_random(const RunConfig& cfg);
int cmd_gen_gadget(const RunConfig& cfg);
int cmd_bench(const RunConfig& cfg);
int cmd_export(const RunConfig& cfg);
int cmd_reduce(const RunConfig& cfg);

}  // namespace pebble::cli

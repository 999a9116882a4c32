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
#include <vector>

#include "pebble/dag.hpp"

namespace pebble {

/// Static word address of every node plus the cache-line size B. A node lives
/// on line address / B for the whole execution.
class MemoryLayout {
 public:
  /// Throws ValidationError when line_size is 0 or addresses collide.
  MemoryLayout(std::vector<std::uint64_t> address, std::size_t line_size);

  /// Addresses 0..|V|-1 in node order grouped as sources, internal nodes,
  /// sinks, with no padding.
  static MemoryLayout packed(const Dag& dag, std::size_t line_size);

  /// Like packed(), but every role group starts on a fresh cache-line, so
  /// inputs and outputs never share a line.
  static MemoryLayout aligned(const Dag& dag, std::size_t line_size);

  std::size_t line_size() const noexcept { return line_size_; }
  std::size_t size() const noexcept { return address_.size(); }
  std::uint64_t address(NodeId v) const { return address_.at(v); }
  std::uint64_t line(NodeId v) const { return address_.at(v) / line_size_; }

  /// Inputs occupy one consecutive address range, outputs another, and both
  /// ranges start on a line boundary.
  bool is_aligned(const Dag& dag) const;

 private:
  std::vector<std::uint64_t> address_;
  std::size_t line_size_;
};

/// Result of collapsing a DAG onto its cache-lines.
struct LineDag {
  Dag dag;
  /// Cache-line index of every node of `dag`, ascending.
  std::vector<std::uint64_t> line_of_node;
  /// Node of `dag` each original node maps to.
  std::vector<NodeId> node_of_original;
};

/// Builds the word-granular DAG whose nodes are the occupied cache-lines:
/// one node per distinct line, one edge per distinct induced (line, line)
/// pair. Node names join the member names with '+' in address order.
/// Throws ValidationError when the layout does not cover the DAG, when an
/// edge falls inside one line, or when the induced line graph is cyclic.
LineDag transform_cache_lines(const Dag& dag, const MemoryLayout& layout);

}  // namespace pebble

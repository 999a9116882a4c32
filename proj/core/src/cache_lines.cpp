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

#include "pebble/cache_lines.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "pebble/error.hpp"

namespace pebble {
namespace {

std::vector<std::vector<NodeId>> role_groups(const Dag& dag) {
  std::vector<std::vector<NodeId>> groups(3);
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    groups[static_cast<std::size_t>(dag.role(v))].push_back(v);
  }
  return groups;
}

}  // namespace

MemoryLayout::MemoryLayout(std::vector<std::uint64_t> address, std::size_t line_size)
    : address_(std::move(address)), line_size_(line_size) {
  if (line_size_ == 0) throw ValidationError("cache-line size must be positive");
  std::unordered_set<std::uint64_t> used;
  used.reserve(address_.size());
  for (NodeId v = 0; v < address_.size(); ++v) {
    if (!used.insert(address_[v]).second) {
      throw ValidationError("address " + std::to_string(address_[v]) +
                            " assigned to more than one node");
    }
  }
}

MemoryLayout MemoryLayout::packed(const Dag& dag, std::size_t line_size) {
  std::vector<std::uint64_t> address(dag.node_count());
  std::uint64_t next = 0;
  for (const auto& group : role_groups(dag)) {
    for (NodeId v : group) address[v] = next++;
  }
  return MemoryLayout(std::move(address), line_size);
}

MemoryLayout MemoryLayout::aligned(const Dag& dag, std::size_t line_size) {
  if (line_size == 0) throw ValidationError("cache-line size must be positive");
  std::vector<std::uint64_t> address(dag.node_count());
  std::uint64_t next = 0;
  for (const auto& group : role_groups(dag)) {
    if (group.empty()) continue;
    next = (next + line_size - 1) / line_size * line_size;
    for (NodeId v : group) address[v] = next++;
  }
  return MemoryLayout(std::move(address), line_size);
}

bool MemoryLayout::is_aligned(const Dag& dag) const {
  if (address_.size() != dag.node_count()) return false;
  auto check = [&](const std::vector<NodeId>& group) {
    if (group.empty()) return true;
    std::vector<std::uint64_t> a;
    for (NodeId v : group) a.push_back(address_[v]);
    std::sort(a.begin(), a.end());
    return a.front() % line_size_ == 0 && a.back() - a.front() + 1 == a.size();
  };
  return check(dag.sources()) && check(dag.sinks());
}

LineDag transform_cache_lines(const Dag& dag, const MemoryLayout& layout) {
  if (layout.size() != dag.node_count()) {
    throw ValidationError("memory layout covers " + std::to_string(layout.size()) +
                          " nodes, DAG has " + std::to_string(dag.node_count()));
  }

  // Occupied lines, and their members in address order.
  std::map<std::uint64_t, std::vector<NodeId>> members;
  for (NodeId v = 0; v < dag.node_count(); ++v) members[layout.line(v)].push_back(v);

  LineDag out;
  out.node_of_original.resize(dag.node_count());
  std::vector<std::string> names;
  for (auto& [line, nodes] : members) {
    std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
      return layout.address(a) < layout.address(b);
    });
    std::string name;
    for (NodeId v : nodes) {
      if (!name.empty()) name += '+';
      name += dag.name(v);
      out.node_of_original[v] = names.size();
    }
    names.push_back(std::move(name));
    out.line_of_node.push_back(line);
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const Edge& e : dag.edges()) {
    const Edge induced{out.node_of_original[e.src], out.node_of_original[e.dst]};
    if (induced.src == induced.dst) {
      throw ValidationError("edge " + dag.name(e.src) + " -> " + dag.name(e.dst) +
                            " lies within cache-line " +
                            std::to_string(layout.line(e.src)));
    }
    if (seen.insert(induced).second) edges.push_back(induced);
  }
  out.dag = Dag::create(std::move(names), std::move(edges));
  return out;
}

}  // namespace pebble

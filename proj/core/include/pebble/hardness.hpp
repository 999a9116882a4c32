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
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pebble/dag.hpp"
#include "pebble/game.hpp"

namespace pebble {

/// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
 public:
  /// Throws ValidationError on self-loops, repeated edges or bad endpoints.
  UndirectedGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  /// Edges normalised to (smaller, larger), in input order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_.at(a * n_ + b) != 0; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<char> adj_;
};

/// Reads "n" on the first non-comment line, then one "i j" edge per line
/// with 1-based vertex numbers. '#' starts a comment.
UndirectedGraph parse_undirected_graph(std::istream& in);

/// Hamiltonian-path hardness instance: one star gadget per vertex v_i (sink
/// t<i>, inputs s<i>_<j> for j = 1..n), with s<i>_<j> and s<j>_<i> merged into
/// one source whenever v_i and v_j are adjacent.
struct GadgetInstance {
  UndirectedGraph source_graph;
  Dag dag;
  Cost threshold = 0;  ///< n^2 + n + 1
  /// (i, j), 0-based, to the source node feeding t<i> for input j.
  std::map<std::pair<std::size_t, std::size_t>, NodeId> source_map;
  std::vector<NodeId> sinks;  ///< t_1..t_n
};

/// Throws ValidationError for n < 2.
GadgetInstance build_gadget_instance(const UndirectedGraph& g);

/// {"n":..,"threshold":..,"merges":[[i,j],...]} with 1-based vertex numbers.
std::string gadget_sidecar_json(const GadgetInstance& instance);

inline constexpr std::size_t kHamPathEnumerationLimit = 10;

/// Brute force over vertex permutations. Throws SizeGuardError above
/// kHamPathEnumerationLimit vertices.
bool has_hamiltonian_path(const UndirectedGraph& g);

/// Largest source graph verify_reduction accepts; n = 5 would give a
/// 25-vertex conflict graph, beyond Held-Karp.
inline constexpr std::size_t kReductionLimit = 4;

struct ReductionCheck {
  bool has_ham_path = false;
  Cost opt = 0;
  Cost threshold = 0;
  bool consistent = false;  ///< has_ham_path == (opt <= threshold)
};

/// Compares Hamiltonian-path existence with the optimal two-pebble cost of
/// the gadget DAG (Held-Karp + 3). Throws SizeGuardError above kReductionLimit.
ReductionCheck verify_reduction(const UndirectedGraph& g);

/// One representative per isomorphism class of simple graphs on n vertices
/// (the one with the smallest canonical adjacency code). n <= 6.
std::vector<UndirectedGraph> non_isomorphic_graphs(std::size_t n);

}  // namespace pebble

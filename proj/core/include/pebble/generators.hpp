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
#include <random>

#include "pebble/dag.hpp"
#include "pebble/hardness.hpp"

namespace pebble {

/// The only random engine used anywhere; its output sequence is fixed by the
/// standard, and the helpers below avoid implementation-defined
/// distributions, so a seed reproduces instances across platforms.
using Rng = std::mt19937_64;

/// Uniform in [0, n). n > 0.
std::size_t uniform_index(Rng& rng, std::size_t n);
/// Uniform in [lo, hi].
std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi);
/// True with probability p (53-bit resolution).
bool bernoulli(Rng& rng, double p);

/// Each of the sources x sinks pairs becomes an edge x<j> -> y<i> with
/// probability `density`. Nodes left without edges are dropped, so the DAG
/// matches its edge-list serialisation. Throws ValidationError for zero
/// sources/sinks or density outside [0, 1].
Dag random_bipartite_dag(std::size_t sources, std::size_t sinks, double density, Rng& rng);

/// One-level DAG with 1..max_edges distinct edges over at most 4 sources and
/// 4 sinks, named s<i> and t<j>.
Dag random_one_level_dag(std::size_t max_edges, Rng& rng);

/// Leveled DAG with `edge_levels` levels of edges. Node layers hold 1..3
/// nodes, every non-source node has a parent in the previous layer, and each
/// level has at most max_edges_per_level (>= 3) edges.
Dag random_leveled_dag(std::size_t edge_levels, std::size_t max_edges_per_level, Rng& rng);

/// G(n, p) on n vertices.
UndirectedGraph random_graph(std::size_t n, double p, Rng& rng);

}  // namespace pebble

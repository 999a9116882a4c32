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

#include "pebble/generators.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pebble/error.hpp"

namespace pebble {
namespace {

// Builds a DAG from named edges, interning names in first-appearance order.
class EdgeCollector {
 public:
  void add(const std::string& a, const std::string& b) {
    edges_.push_back({intern(a), intern(b)});
  }
  Dag build() { return Dag::create(std::move(names_), std::move(edges_)); }

 private:
  NodeId intern(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, names_.size());
    if (inserted) names_.push_back(name);
    return it->second;
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, NodeId> ids_;
};

// Partial Fisher-Yates: the first k entries become a uniform k-subset.
template <typename T>
void shuffle_prefix(std::vector<T>& items, std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k && i + 1 < items.size(); ++i) {
    std::swap(items[i], items[i + uniform_index(rng, items.size() - i)]);
  }
}

}  // namespace

std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_index(rng, hi - lo + 1);
}

bool bernoulli(Rng& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

Dag random_bipartite_dag(std::size_t sources, std::size_t sinks, double density, Rng& rng) {
  if (sources == 0 || sinks == 0) throw ValidationError("generator needs at least one source and one sink");
  if (!(density >= 0.0 && density <= 1.0)) throw ValidationError("density must lie in [0, 1]");
  EdgeCollector out;
  for (std::size_t i = 1; i <= sinks; ++i) {
    for (std::size_t j = 1; j <= sources; ++j) {
      if (bernoulli(rng, density)) out.add("x" + std::to_string(j), "y" + std::to_string(i));
    }
  }
  return out.build();
}

Dag random_one_level_dag(std::size_t max_edges, Rng& rng) {
  if (max_edges == 0) throw ValidationError("max_edges must be positive");
  const std::size_t a = uniform_between(rng, 1, 4);
  const std::size_t b = uniform_between(rng, 1, 4);
  std::vector<Edge> all;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) all.push_back({i, j});
  }
  const std::size_t m = uniform_between(rng, 1, std::min(max_edges, all.size()));
  shuffle_prefix(all, m, rng);
  EdgeCollector out;
  for (std::size_t k = 0; k < m; ++k) {
    out.add("s" + std::to_string(all[k].src + 1), "t" + std::to_string(all[k].dst + 1));
  }
  return out.build();
}

Dag random_leveled_dag(std::size_t edge_levels, std::size_t max_edges_per_level, Rng& rng) {
  if (edge_levels == 0) throw ValidationError("need at least one level");
  if (max_edges_per_level < 3) throw ValidationError("max_edges_per_level must be at least 3");
  std::vector<std::size_t> width(edge_levels + 1);
  for (auto& w : width) w = uniform_between(rng, 1, 3);
  auto name = [](std::size_t layer, std::size_t i) {
    return "v" + std::to_string(layer) + "_" + std::to_string(i + 1);
  };

  EdgeCollector out;
  for (std::size_t layer = 0; layer < edge_levels; ++layer) {
    std::vector<Edge> chosen;
    std::vector<Edge> spare;
    for (std::size_t j = 0; j < width[layer + 1]; ++j) {
      const std::size_t parent = uniform_index(rng, width[layer]);
      chosen.push_back({parent, j});
      for (std::size_t i = 0; i < width[layer]; ++i) {
        if (i != parent) spare.push_back({i, j});
      }
    }
    const std::size_t extra = uniform_between(
        rng, 0, std::min(spare.size(), max_edges_per_level - chosen.size()));
    shuffle_prefix(spare, extra, rng);
    chosen.insert(chosen.end(), spare.begin(), spare.begin() + static_cast<std::ptrdiff_t>(extra));
    for (const Edge& e : chosen) out.add(name(layer, e.src), name(layer + 1, e.dst));
  }
  return out.build();
}

UndirectedGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (bernoulli(rng, p)) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

}  // namespace pebble

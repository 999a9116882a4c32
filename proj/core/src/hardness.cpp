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

#include "pebble/hardness.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pebble/conflict_graph.hpp"
#include "pebble/error.hpp"
#include "pebble/exact.hpp"

namespace pebble {

UndirectedGraph::UndirectedGraph(std::size_t n,
                                 std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), adj_(n * n, 0) {
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ValidationError("graph edge endpoint out of range");
    if (a == b) throw ValidationError("self-loop on vertex " + std::to_string(a + 1));
    if (adj_[a * n + b]) {
      throw ValidationError("repeated edge " + std::to_string(a + 1) + "-" +
                            std::to_string(b + 1));
    }
    adj_[a * n + b] = adj_[b * n + a] = 1;
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
}

UndirectedGraph parse_undirected_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::vector<long long> values;
    long long x = 0;
    while (line >> x) values.push_back(x);
    if (!line.eof()) throw ParseError(line_no, "expected integers");
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1 || values[0] < 0) throw ParseError(line_no, "expected vertex count");
      n = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (values.size() != 2 || values[0] < 1 || values[1] < 1 ||
        static_cast<std::size_t>(values[0]) > *n || static_cast<std::size_t>(values[1]) > *n) {
      throw ParseError(line_no, "expected an edge 'i j' with 1 <= i, j <= " + std::to_string(*n));
    }
    edges.emplace_back(values[0] - 1, values[1] - 1);
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  try {
    return UndirectedGraph(*n, std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ParseError(line_no, e.what());
  }
}

GadgetInstance build_gadget_instance(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw ValidationError("gadget reduction needs at least 2 vertices");

  auto label = [](std::size_t i, std::size_t j) {
    return "s" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };

  GadgetInstance inst{g, Dag{}, static_cast<Cost>(n * n + n + 1), {}, {}};
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // s_ij and s_ji share a node when v_i ~ v_j; the earlier one wins.
      if (i != j && g.adjacent(i, j) && j < i) {
        inst.source_map[{i, j}] = inst.source_map.at({j, i});
        continue;
      }
      inst.source_map[{i, j}] = names.size();
      names.push_back(label(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    inst.sinks.push_back(names.size());
    names.push_back("t" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.push_back({inst.source_map.at({i, j}), inst.sinks[i]});
  }
  inst.dag = Dag::create(std::move(names), std::move(edges));
  return inst;
}

std::string gadget_sidecar_json(const GadgetInstance& instance) {
  nlohmann::ordered_json doc;
  doc["n"] = instance.source_graph.vertex_count();
  doc["threshold"] = instance.threshold;
  auto& merges = doc["merges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : instance.source_graph.edges()) merges.push_back({a + 1, b + 1});
  return doc.dump();
}

bool has_hamiltonian_path(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kHamPathEnumerationLimit) {
    throw SizeGuardError("Hamiltonian path enumeration too large", n, kHamPathEnumerationLimit);
  }
  if (n <= 1) return true;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = g.adjacent(perm[i - 1], perm[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ReductionCheck verify_reduction(const UndirectedGraph& g) {
  if (g.vertex_count() > kReductionLimit) {
    throw SizeGuardError("reduction check too large", g.vertex_count(), kReductionLimit);
  }
  const GadgetInstance inst = build_gadget_instance(g);
  const ConflictGraph cg(inst.dag, CostModel::Standard);
  ReductionCheck check;
  check.has_ham_path = has_hamiltonian_path(g);
  check.opt = held_karp_path(cg).cost + 3;
  check.threshold = inst.threshold;
  check.consistent = check.has_ham_path == (check.opt <= check.threshold);
  return check;
}

std::vector<UndirectedGraph> non_isomorphic_graphs(std::size_t n) {
  if (n > 6) throw SizeGuardError("graph enumeration too large", n, 6);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Canonical code: smallest edge bitmask over all relabelings.
  auto slot_of = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(
        std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin());
  };
  std::set<std::uint64_t> seen;
  std::vector<UndirectedGraph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
    std::uint64_t canon = code;
    for (const auto& p : perms) {
      std::uint64_t relabeled = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (code & (std::uint64_t{1} << s)) {
          relabeled |= std::uint64_t{1} << slot_of(p[slots[s].first], p[slots[s].second]);
        }
      }
      canon = std::min(canon, relabeled);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (canon & (std::uint64_t{1} << s)) edges.push_back(slots[s]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace pebble

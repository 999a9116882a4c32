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

#include "pebble/dag_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pebble/error.hpp"

namespace pebble {
namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (pos != token.size() || token.front() == '-') {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Dag parse_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::set<Edge> seen;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node names, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
    }
    const Edge e{intern(tokens[0]), intern(tokens[1])};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + tokens[0] + " -> " + tokens[1]);
    }
    edges.push_back(e);
    edge_line.push_back(line_no);
  }

  if (auto cycle = find_cycle(names.size(), edges)) {
    // Report the cycle edge that appears last in the input.
    const EdgeId worst = *std::max_element(
        cycle->begin(), cycle->end(),
        [&](EdgeId a, EdgeId b) { return edge_line[a] < edge_line[b]; });
    throw ParseError(edge_line[worst], "cycle detected through edge " +
                                           names[edges[worst].src] + " -> " +
                                           names[edges[worst].dst]);
  }
  return Dag::create(std::move(names), std::move(edges));
}

Dag parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Dag parse_matrix_market(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;

  if (!std::getline(in, raw)) throw ParseError(1, "empty Matrix Market stream");
  ++line_no;
  auto header = split_ws(raw);
  if (header.size() < 4 || header[0] != "%%MatrixMarket" ||
      lower(header[1]) != "matrix" || lower(header[2]) != "coordinate") {
    throw ParseError(line_no, "expected '%%MatrixMarket matrix coordinate ...' header");
  }
  const std::string field = lower(header[3]);
  if (field != "real" && field != "integer" && field != "pattern" &&
      field != "complex") {
    throw ParseError(line_no, "unsupported field '" + header[3] + "'");
  }
  const std::string symmetry = header.size() > 4 ? lower(header[4]) : "general";
  const bool mirrored = symmetry == "symmetric" || symmetry == "skew-symmetric" ||
                        symmetry == "hermitian";
  if (!mirrored && symmetry != "general") {
    throw ParseError(line_no, "unsupported symmetry '" + header[4] + "'");
  }

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  bool have_size = false;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  auto add = [&](std::size_t i, std::size_t j) {
    // Columns are nodes 0..cols-1, rows follow.
    edges.push_back(Edge{j - 1, cols + i - 1});
  };

  std::size_t entries = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (!have_size) {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'rows cols nnz'");
      rows = parse_index(tokens[0], line_no);
      cols = parse_index(tokens[1], line_no);
      nnz = parse_index(tokens[2], line_no);
      have_size = true;
      continue;
    }
    const std::size_t want = field == "pattern" ? 2 : field == "complex" ? 4 : 3;
    if (tokens.size() != want) {
      throw ParseError(line_no, "expected " + std::to_string(want) + " fields per entry");
    }
    const std::size_t i = parse_index(tokens[0], line_no);
    const std::size_t j = parse_index(tokens[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(line_no, "entry (" + tokens[0] + "," + tokens[1] +
                                    ") out of range for " + std::to_string(rows) +
                                    "x" + std::to_string(cols) + " matrix");
    }
    if (!seen.emplace(i, j).second) {
      throw ParseError(line_no, "duplicate entry (" + tokens[0] + "," + tokens[1] + ")");
    }
    add(i, j);
    if (mirrored && i != j) {
      if (j > rows || i > cols) throw ParseError(line_no, "symmetric entry out of range");
      if (!seen.emplace(j, i).second) {
        throw ParseError(line_no, "duplicate entry (" + tokens[1] + "," + tokens[0] + ")");
      }
      add(j, i);
    }
    ++entries;
  }
  if (!have_size) throw ParseError(line_no, "missing size line");
  if (entries != nnz) {
    throw ParseError(line_no, "expected " + std::to_string(nnz) + " entries, found " +
                                  std::to_string(entries));
  }

  std::vector<std::string> names;
  names.reserve(rows + cols);
  for (std::size_t j = 1; j <= cols; ++j) names.push_back("x" + std::to_string(j));
  for (std::size_t i = 1; i <= rows; ++i) names.push_back("y" + std::to_string(i));
  return Dag::create(std::move(names), std::move(edges));
}

Dag parse_matrix_market(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_market(in);
}

Dag load_dag(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return parse_matrix_market(in);
  return parse_edge_list(in);
}

std::string to_edge_list(const Dag& dag) {
  std::string out;
  for (const Edge& e : dag.edges()) {
    out += dag.name(e.src);
    out += ' ';
    out += dag.name(e.dst);
    out += '\n';
  }
  return out;
}

std::string to_json(const Dag& dag) {
  nlohmann::ordered_json doc;
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    nodes.push_back({{"id", v}, {"name", dag.name(v)}, {"role", to_string(dag.role(v))}});
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : dag.edges()) edges.push_back({e.src, e.dst});
  return doc.dump();
}

std::string to_dot(const Dag& dag) {
  std::ostringstream out;
  out << "digraph dag {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    const char* shape = dag.role(v) == NodeRole::Source ? "box"
                        : dag.role(v) == NodeRole::Sink ? "doublecircle"
                                                        : "circle";
    out << "  n" << v << " [label=\"" << dag.name(v) << "\", shape=" << shape << "];\n";
  }
  for (const Edge& e : dag.edges()) out << "  n" << e.src << " -> n" << e.dst << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pebble

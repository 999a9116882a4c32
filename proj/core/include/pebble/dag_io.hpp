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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pebble/dag.hpp"

namespace pebble {

/// Reads one edge per line as two whitespace-separated node names. Text after
/// '#' is ignored. Names are interned in first-appearance order. Errors carry
/// the offending line number (ParseError).
Dag parse_edge_list(std::istream& in);
Dag parse_edge_list(std::string_view text);

/// Reads a Matrix Market coordinate file as the one-level DAG of y = A x:
/// node x<j> per column, y<i> per row (1-based, columns first), and an edge
/// x<j> -> y<i> per stored entry, in file order. Symmetric files are expanded.
Dag parse_matrix_market(std::istream& in);
Dag parse_matrix_market(std::string_view text);

/// Loads a DAG from disk; files starting with "%%MatrixMarket" are read as
/// Matrix Market, anything else as an edge list.
Dag load_dag(const std::filesystem::path& path);

/// Edge-list text accepted by parse_edge_list. Isolated nodes are dropped.
std::string to_edge_list(const Dag& dag);

/// {"nodes":[{"id","name","role"}],"edges":[[src,dst],...]}
std::string to_json(const Dag& dag);

std::string to_dot(const Dag& dag);

}  // namespace pebble

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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "json.hpp"
#include "pebble/dag.hpp"
#include "pebble/dag_io.hpp"
#include "pebble/error.hpp"

namespace pebble {
namespace {

constexpr const char* kEq1Matrix =
    "%%MatrixMarket matrix coordinate pattern general\n"
    "% y = A x from the summation example\n"
    "2 4 5\n"
    "1 1\n1 2\n1 3\n2 3\n2 4\n";

TEST(EdgeList, FanIn) {
  const Dag dag = parse_edge_list("a c\nb c");
  EXPECT_EQ(dag.node_count(), 3u);
  EXPECT_EQ(dag.edge_count(), 2u);
  EXPECT_EQ(dag.name(0), "a");
  EXPECT_EQ(dag.name(1), "c");
  EXPECT_EQ(dag.name(2), "b");
  EXPECT_EQ(dag.role(*dag.find("a")), NodeRole::Source);
  EXPECT_EQ(dag.role(*dag.find("b")), NodeRole::Source);
  EXPECT_EQ(dag.role(*dag.find("c")), NodeRole::Sink);
  EXPECT_TRUE(dag.is_one_level());
}

TEST(EdgeList, EmptyStream) {
  const Dag dag = parse_edge_list("");
  EXPECT_EQ(dag.node_count(), 0u);
  EXPECT_EQ(dag.edge_count(), 0u);
}

TEST(EdgeList, CommentsAndBlankLines) {
  const Dag dag = parse_edge_list("# header\n\n  a   b  # trailing\n\t\nb c\n");
  EXPECT_EQ(dag.edge_count(), 2u);
  EXPECT_EQ(dag.role(*dag.find("b")), NodeRole::Internal);
  EXPECT_FALSE(dag.is_one_level());
}

TEST(EdgeList, TwoCycleReportsLine) {
  try {
    parse_edge_list("a b\nb a\n");
    FAIL() << "expected a cycle error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(EdgeList, LongerCycleReportsLastEdge) {
  try {
    parse_edge_list("a b\nx y\nb c\nc a\nc d\n");
    FAIL() << "expected a cycle error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(EdgeList, Errors) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("a b\na b\n"), 2u);      // duplicate
  EXPECT_EQ(line_of("a b\n\nc c\n"), 3u);    // self-loop
  EXPECT_EQ(line_of("a b c\n"), 1u);         // malformed
  EXPECT_EQ(line_of("a b\nlonely\n"), 2u);   // malformed
}

TEST(Dag, CreateValidates) {
  EXPECT_THROW(Dag::create({"a"}, {{0, 0}}), ValidationError);
  EXPECT_THROW(Dag::create({"a", "b"}, {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(Dag::create({"a", "b"}, {{0, 2}}), ValidationError);
  EXPECT_THROW(Dag::create({"a", "a"}, {}), ValidationError);
  EXPECT_THROW(Dag::create({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}), ValidationError);
}

TEST(Dag, IsolatedNodeIsSource) {
  const Dag dag = Dag::create({"a", "b", "z"}, {{0, 1}});
  EXPECT_EQ(dag.role(2), NodeRole::Source);
  EXPECT_EQ(dag.sources(), (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(dag.sinks(), (std::vector<NodeId>{1}));
}

TEST(Dag, TopologicalOrder) {
  const Dag dag = parse_edge_list("c d\nb c\na b\n");
  const auto order = topological_order(dag);
  ASSERT_EQ(order.size(), 4u);
  std::vector<std::size_t> pos(4);
  for (std::size_t i = 0; i < 4; ++i) pos[order[i]] = i;
  for (const Edge& e : dag.edges()) EXPECT_LT(pos[e.src], pos[e.dst]);
}

TEST(MatrixMarket, SummationExample) {
  const Dag dag = parse_matrix_market(kEq1Matrix);
  EXPECT_EQ(dag.node_count(), 6u);
  EXPECT_EQ(dag.edge_count(), 5u);
  EXPECT_EQ(dag.out_degree(*dag.find("x3")), 2u);
  EXPECT_EQ(dag.in_degree(*dag.find("y1")), 3u);
  EXPECT_EQ(dag.sources().size(), 4u);
  EXPECT_EQ(dag.sinks().size(), 2u);
  EXPECT_TRUE(dag.is_one_level());
}

TEST(MatrixMarket, SingleEntry) {
  const Dag dag = parse_matrix_market("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 2.5\n");
  EXPECT_EQ(dag.node_count(), 2u);
  ASSERT_EQ(dag.edge_count(), 1u);
  EXPECT_EQ(dag.name(dag.edge(0).src), "x1");
  EXPECT_EQ(dag.name(dag.edge(0).dst), "y1");
}

TEST(MatrixMarket, IdentityIsDisjointEdges) {
  const Dag dag = parse_matrix_market(
      "%%MatrixMarket matrix coordinate integer general\n3 3 3\n1 1 1\n2 2 1\n3 3 1\n");
  EXPECT_EQ(dag.edge_count(), 3u);
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    EXPECT_EQ(dag.in_degree(v) + dag.out_degree(v), 1u);
  }
}

TEST(MatrixMarket, SymmetricIsExpanded) {
  const Dag dag = parse_matrix_market(
      "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4\n2 1 1\n");
  EXPECT_EQ(dag.edge_count(), 3u);
  EXPECT_TRUE(dag.find_edge(*dag.find("x1"), *dag.find("y2")).has_value());
  EXPECT_TRUE(dag.find_edge(*dag.find("x2"), *dag.find("y1")).has_value());
}

TEST(MatrixMarket, Errors) {
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\n1\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("garbage\n"), ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n3 1\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 1\n1 1\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 1\n"),
               ParseError);
  try {
    parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 1\n0 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(Export, JsonShape) {
  const Dag dag = parse_edge_list("a c\nb c");
  const auto doc = nlohmann::json::parse(to_json(dag));
  ASSERT_EQ(doc["nodes"].size(), 3u);
  EXPECT_EQ(doc["nodes"][0]["id"], 0);
  EXPECT_EQ(doc["nodes"][0]["name"], "a");
  EXPECT_EQ(doc["nodes"][0]["role"], "source");
  EXPECT_EQ(doc["nodes"][1]["role"], "sink");
  EXPECT_EQ(doc["edges"], nlohmann::json::parse("[[0,1],[2,1]]"));
}

TEST(Export, EdgeListRoundTrip) {
  const Dag dag = parse_matrix_market(kEq1Matrix);
  const Dag again = parse_edge_list(to_edge_list(dag));
  ASSERT_EQ(again.edge_count(), dag.edge_count());
  for (EdgeId e = 0; e < dag.edge_count(); ++e) {
    EXPECT_EQ(again.name(again.edge(e).src), dag.name(dag.edge(e).src));
    EXPECT_EQ(again.name(again.edge(e).dst), dag.name(dag.edge(e).dst));
  }
}

TEST(Export, Dot) {
  const std::string dot = to_dot(parse_edge_list("a c\nb c"));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n1"), std::string::npos);
}

}  // namespace
}  // namespace pebble

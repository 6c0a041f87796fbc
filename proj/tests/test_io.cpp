// Copyright 2026 The uniwiener Authors
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

#include <sstream>

#include "uniwiener/constructors.hpp"
#include "uniwiener/error.hpp"
#include "uniwiener/io.hpp"

namespace uniwiener {
namespace {

Errc parse_code(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::Unsupported;
}

TEST(EdgeList, WritesSortedNormalisedEdges) {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}, {2, 3}});
  EXPECT_EQ(to_edge_list(g), "4 4\n0 1\n0 2\n1 3\n2 3\n");
}

TEST(EdgeList, RoundTripIsIdentical) {
  const Graph g = make_H({{make_sab(3, 5), {}, make_star(2), {}}}).graph();
  const std::string text = to_edge_list(g);
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(to_edge_list(parse_edge_list(text)), text);
}

TEST(EdgeList, AcceptsLooseWhitespaceAndReversedPairs) {
  EXPECT_EQ(parse_edge_list("3 3 1 0\n2 1\t0   2\n\n"), make_cycle(3).graph());
}

TEST(EdgeList, Rejects) {
  EXPECT_EQ(parse_code(""), Errc::ParseError);
  EXPECT_EQ(parse_code("3"), Errc::ParseError);
  EXPECT_EQ(parse_code("3 2\n0 1\n"), Errc::ParseError);
  EXPECT_EQ(parse_code("3 1\n0 1\n1 2\n"), Errc::ParseError);
  EXPECT_EQ(parse_code("3 1\n0 x\n"), Errc::ParseError);
  EXPECT_EQ(parse_code("3 1\n0 1.5\n"), Errc::ParseError);
  EXPECT_EQ(parse_code("-3 0\n"), Errc::ParseError);
  EXPECT_EQ(parse_code("3 1\n0 3\n"), Errc::VertexOutOfRange);
  EXPECT_EQ(parse_code("3 1\n1 1\n"), Errc::SelfLoop);
  EXPECT_EQ(parse_code("3 2\n0 1\n1 0\n"), Errc::DuplicateEdge);
}

TEST(Dot, Shape) {
  const Graph g = make_cycle(3).graph();
  EXPECT_EQ(to_dot(g), "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST(Dot, StatementCounts) {
  const Graph g = make_H({{make_sab(2, 3), {}, {}, make_star(1)}}).graph();
  const std::string dot = to_dot(g);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find("--") != std::string::npos) {
      ++edges;
    } else if (!line.empty() && line.back() == ';') {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, static_cast<std::size_t>(g.order()));
  EXPECT_EQ(edges, static_cast<std::size_t>(g.order()));
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
}

}  // namespace
}  // namespace uniwiener

// Copyright 2026 The ippkit Authors
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

#include "ippkit/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "ippkit/corpus.h"
#include "ippkit/errors.h"
#include "ippkit/named_graphs.h"

namespace ippkit {
namespace {

TEST(GraphTest, TriangleFromEdgeList) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  Graph g = from_edge_list(3, edges);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.is_complete());
}

TEST(GraphTest, SingleVertex) {
  Graph g = from_edge_list(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_TRUE(g.is_connected());
}

TEST(GraphTest, DuplicateEdgesCollapse) {
  std::vector<Edge> edges{{0, 1}, {0, 1}, {1, 2}};
  EXPECT_EQ(from_edge_list(4, edges).edge_count(), 2);
  std::vector<Edge> reversed{{0, 1}, {1, 0}};
  EXPECT_EQ(from_edge_list(2, reversed).edge_count(), 1);
}

TEST(GraphTest, RejectsBadInput) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> out_of_range{{0, 3}};
  std::vector<Edge> negative{{-1, 0}};
  EXPECT_THROW(from_edge_list(2, loop), InvalidGraphError);
  EXPECT_THROW(from_edge_list(3, out_of_range), InvalidGraphError);
  EXPECT_THROW(from_edge_list(3, negative), InvalidGraphError);
  EXPECT_THROW(from_edge_list(0, {}), InvalidGraphError);
  EXPECT_THROW(from_edge_list(65, {}), InvalidGraphError);
  EXPECT_NO_THROW(from_edge_list(64, {}));
}

TEST(GraphTest, InducedSubgraphKeepsLabels) {
  Graph g = named::cycle(5);
  VertexSet keep;
  keep.insert(1);
  keep.insert(2);
  keep.insert(4);
  Graph sub = g.induced_subgraph(keep);
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.edge_count(), 1);
  EXPECT_EQ(sub.label(0), 1);
  EXPECT_EQ(sub.label(2), 4);
  Graph rest = g.without(VertexSet::Single(0));
  EXPECT_EQ(rest.order(), 4);
  EXPECT_EQ(rest.label(0), 1);
}

TEST(GraphTest, Components) {
  std::vector<Graph> parts{named::complete(3), named::path(2),
                           named::edgeless(1)};
  Graph g = disjoint_union(parts);
  auto comps = g.components();
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].to_vector(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(comps[1].to_vector(), (std::vector<int>{3, 4}));
  EXPECT_EQ(comps[2].to_vector(), (std::vector<int>{5}));
  EXPECT_FALSE(g.is_connected());
}

TEST(GraphTest, ParseEdgeList) {
  Graph g = parse_edge_list(
      "# a square\n"
      "4 4\n"
      "0 1\n1 2  # trailing comment\n\n2 3\n3 0\n");
  EXPECT_EQ(g, named::cycle(4));
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
}

TEST(GraphTest, ParseErrorsCarryLineNumbers) {
  try {
    parse_edge_list("3 2\n0 1\n1 7\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(DistanceTest, FourCycle) {
  DistanceMatrix d = all_pairs_distances(named::cycle(4));
  EXPECT_EQ(d(0, 2), 2);
  EXPECT_EQ(d(1, 3), 2);
  EXPECT_EQ(d(0, 1), 1);
  EXPECT_EQ(d.diameter(), 2);
}

TEST(DistanceTest, DisconnectedIsInfinite) {
  DistanceMatrix d = all_pairs_distances(named::edgeless(2));
  EXPECT_EQ(d(0, 1), DistanceMatrix::kInfinite);
  EXPECT_EQ(d.diameter(), DistanceMatrix::kInfinite);
}

TEST(DistanceTest, HexagonWithPendantsDiameter) {
  EXPECT_EQ(all_pairs_distances(named::hexagon_with_four_pendants()).diameter(),
            5);
}

// Symmetry, zero diagonal, triangle inequality, d(u,v) = 1 iff adjacent, and
// every induced path on at most three vertices is isometric; over every graph
// on up to eight vertices.
TEST(DistanceTest, ExhaustivePropertiesUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      DistanceMatrix d = all_pairs_distances(g);
      for (int u = 0; u < n; ++u) {
        ASSERT_EQ(d(u, u), 0);
        for (int v = 0; v < n; ++v) {
          ASSERT_EQ(d(u, v), d(v, u));
          ASSERT_EQ(d(u, v) == 1, g.adjacent(u, v));
          for (int w = 0; w < n; ++w) ASSERT_LE(d(u, w), d(u, v) + d(v, w));
        }
        for (int v : g.neighbors(u).to_vector()) {
          ASSERT_TRUE(is_isometric_path(g, d, Path{{u, v}}));
          for (int w : g.neighbors(v).to_vector()) {
            Path p{{u, v, w}};
            if (w != u && is_induced_path(g, p)) {
              ASSERT_TRUE(is_isometric_path(g, d, p));
            }
          }
        }
      }
    }
  }
}

TEST(PathTest, CyclePaths) {
  Graph c6 = named::cycle(6);
  DistanceMatrix d = all_pairs_distances(c6);
  EXPECT_TRUE(is_isometric_path(c6, d, Path{{0, 1, 2, 3}}));
  EXPECT_FALSE(is_isometric_path(c6, d, Path{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(is_induced_path(c6, Path{{0, 1, 2, 3, 4}}));
}

TEST(PathTest, SingleVertexIsIsometric) {
  Graph g = named::complete(3);
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_TRUE(is_isometric_path(g, d, Path{{1}}));
  EXPECT_TRUE(is_induced_path(g, Path{{1}}));
}

TEST(PathTest, TriangleChord) {
  Graph g = named::complete(3);
  DistanceMatrix d = all_pairs_distances(g);
  EXPECT_FALSE(is_isometric_path(g, d, Path{{0, 1, 2}}));
  EXPECT_FALSE(is_induced_path(g, Path{{0, 1, 2}}));
}

TEST(PathTest, PathGraphIsItsOwnPath) {
  Graph p4 = named::path(4);
  EXPECT_TRUE(is_induced_path(p4, Path{{0, 1, 2, 3}}));
  EXPECT_TRUE(is_isometric_path(p4, all_pairs_distances(p4), Path{{0, 1, 2, 3}}));
}

TEST(PathTest, InvalidPaths) {
  Graph p4 = named::path(4);
  EXPECT_FALSE(is_valid_path(p4, Path{{0, 2}}));
  EXPECT_FALSE(is_valid_path(p4, Path{{0, 1, 0}}));
  EXPECT_FALSE(is_valid_path(p4, Path{{}}));
  EXPECT_FALSE(is_valid_path(p4, Path{{0, 9}}));
  EXPECT_THROW(check_path(p4, Path{{0, 2}}), InvalidPathError);
}

// Isometric implies induced; every induced path on at most 3 vertices whose
// ends are nonadjacent is isometric.
TEST(PathTest, IsometricImpliesInducedOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(7, 0.3, rng);
    DistanceMatrix d = all_pairs_distances(g);
    for (int a = 0; a < 7; ++a) {
      for (int b : g.neighbors(a).to_vector()) {
        for (int c : g.neighbors(b).to_vector()) {
          if (c == a) continue;
          Path p{{a, b, c}};
          EXPECT_EQ(is_isometric_path(g, d, p), !g.adjacent(a, c));
          if (is_isometric_path(g, d, p)) EXPECT_TRUE(is_induced_path(g, p));
        }
      }
    }
  }
}

}  // namespace
}  // namespace ippkit

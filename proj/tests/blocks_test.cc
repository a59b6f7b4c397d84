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

#include "ippkit/blocks.h"

#include <gtest/gtest.h>

#include <random>

#include "ippkit/corpus.h"
#include "ippkit/errors.h"
#include "ippkit/graph6.h"
#include "ippkit/named_graphs.h"

namespace ippkit {
namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

// Articulation points by deleting each vertex in turn.
VertexSet bruteforce_cut_vertices(const Graph& g) {
  VertexSet cuts;
  if (g.order() < 3) return cuts;
  for (int v = 0; v < g.order(); ++v) {
    if (!g.without(VertexSet::Single(v)).is_connected()) cuts.insert(v);
  }
  return cuts;
}

TEST(BlocksTest, PathOnThree) {
  BlockDecomposition d = block_decomposition(named::path(3));
  ASSERT_EQ(d.block_count(), 2);
  EXPECT_EQ(d.blocks[0], set_of({0, 1}));
  EXPECT_EQ(d.blocks[1], set_of({1, 2}));
  EXPECT_EQ(d.cut_vertices, set_of({1}));
  EXPECT_EQ(d.leaf_block_indices, (std::vector<int>{0, 1}));
}

TEST(BlocksTest, CompleteGraph) {
  BlockDecomposition d = block_decomposition(named::complete(5));
  EXPECT_EQ(d.block_count(), 1);
  EXPECT_TRUE(d.cut_vertices.empty());
}

TEST(BlocksTest, Bowtie) {
  Graph g = named::bowtie();
  BlockDecomposition d = block_decomposition(g);
  ASSERT_EQ(d.block_count(), 2);
  EXPECT_EQ(d.cut_vertices, bruteforce_cut_vertices(g));
  EXPECT_EQ(d.cut_vertices.size(), 1);
  EXPECT_EQ(d.leaf_block_indices.size(), 2u);
  for (VertexSet b : d.blocks) EXPECT_EQ(b.size(), 3);
}

TEST(BlocksTest, SingleVertex) {
  BlockDecomposition d = block_decomposition(named::complete(1));
  ASSERT_EQ(d.block_count(), 1);
  EXPECT_EQ(d.blocks[0], VertexSet::Single(0));
}

TEST(BlocksTest, DisconnectedThrows) {
  EXPECT_THROW(block_decomposition(named::edgeless(2)), DisconnectedGraphError);
}

TEST(BlocksTest, StructuralInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 15;
    Graph g = random_connected_graph(n, trial % 3 == 0 ? 0.0 : 0.08, rng);
    BlockDecomposition d = block_decomposition(g);
    EXPECT_EQ(d.cut_vertices, bruteforce_cut_vertices(g));
    // Every edge lies in exactly one block.
    for (const auto& [u, v] : g.edges()) {
      int hits = 0;
      for (VertexSet b : d.blocks) hits += b.contains(u) && b.contains(v);
      EXPECT_EQ(hits, 1);
    }
    int size_sum = 0;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      size_sum += d.blocks[i].size() - 1;
      EXPECT_TRUE(is_biconnected(g.induced_subgraph(d.blocks[i])));
      for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
        VertexSet shared = d.blocks[i] & d.blocks[j];
        EXPECT_LE(shared.size(), 1);
        EXPECT_TRUE(shared.is_subset_of(d.cut_vertices));
      }
    }
    EXPECT_EQ(size_sum, n - 1);
    if (d.block_count() > 1) EXPECT_GE(d.leaf_block_indices.size(), 2u);
  }
}

TEST(BlocksTest, Biconnected) {
  EXPECT_TRUE(is_biconnected(named::complete(2)));
  EXPECT_FALSE(is_biconnected(named::path(3)));
  EXPECT_TRUE(is_biconnected(named::cycle(4)));
  EXPECT_FALSE(is_biconnected(named::edgeless(2)));
}

TEST(BlocksTest, BlockGraphs) {
  EXPECT_TRUE(is_block_graph(named::bowtie()));
  EXPECT_FALSE(is_block_graph(named::cycle(4)));
  EXPECT_TRUE(is_block_graph(named::star(4)));
  EXPECT_TRUE(is_block_graph(named::path(6)));
  EXPECT_FALSE(is_block_graph(named::diamond()));
}

TEST(BlocksTest, DiamondFreeChordal) {
  EXPECT_FALSE(is_diamond_free_chordal(named::diamond()));
  EXPECT_FALSE(is_diamond_free_chordal(named::cycle(5)));
  EXPECT_TRUE(is_diamond_free_chordal(named::bowtie()));
  EXPECT_TRUE(is_chordal(named::diamond()));
  EXPECT_FALSE(is_diamond_free(named::diamond()));
  EXPECT_FALSE(is_chordal(named::cycle(4)));
  EXPECT_TRUE(is_diamond_free(named::cycle(4)));
}

// Block graphs are exactly the diamond-free chordal graphs.
TEST(BlocksTest, BlockGraphRecognitionAgrees) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      EXPECT_EQ(is_block_graph(g), is_diamond_free_chordal(g))
          << encode_graph6(g);
    }
  }
}

TEST(BlocksTest, EvenBlockCount) {
  EXPECT_EQ(count_even_blocks(block_decomposition(named::path(3))), 2);
  EXPECT_EQ(count_even_blocks(block_decomposition(named::bowtie())), 0);
  EXPECT_EQ(
      count_even_blocks(block_decomposition(named::complete_with_pendant(5))),
      1);
}

}  // namespace
}  // namespace ippkit

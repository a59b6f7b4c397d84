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

// Blocks (maximal biconnected induced subgraphs), cut vertices and the
// block-cut tree of a connected graph.

#ifndef IPPKIT_BLOCKS_H_
#define IPPKIT_BLOCKS_H_

#include <vector>

#include "ippkit/graph.h"

namespace ippkit {

struct BlockDecomposition {
  // Each block's members in increasing order; blocks sorted
  // lexicographically by that list.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  // block_cut_tree[i] = cut vertices contained in blocks[i]; the tree's
  // edges join block i to each of them.
  std::vector<VertexSet> block_cut_tree;
  // Blocks containing exactly one cut vertex.
  std::vector<int> leaf_block_indices;

  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Lowpoint depth-first search. K1 is one block {0}; K2 is one block.
// Throws DisconnectedGraphError.
BlockDecomposition block_decomposition(const Graph& g);

// Connected with no cut vertex.
bool is_biconnected(const Graph& g);

// Every block induces a complete graph. Throws DisconnectedGraphError.
bool is_block_graph(const Graph& g);

// No induced diamond (K4 minus an edge) and no induced cycle of length at
// least 4, decided without reference to blocks: a 4-subset scan plus a
// perfect elimination ordering from maximum cardinality search. Throws
// DisconnectedGraphError.
bool is_diamond_free_chordal(const Graph& g);
bool is_chordal(const Graph& g);
bool is_diamond_free(const Graph& g);

// Blocks with an even number of vertices.
int count_even_blocks(const BlockDecomposition& d);

}  // namespace ippkit

#endif  // IPPKIT_BLOCKS_H_

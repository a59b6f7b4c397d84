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

#ifndef IPPKIT_NAMED_GRAPHS_H_
#define IPPKIT_NAMED_GRAPHS_H_

#include <string>
#include <vector>

#include "ippkit/graph.h"

namespace ippkit::named {

Graph complete(int n);
Graph cycle(int n);
// n vertices, n - 1 edges.
Graph path(int n);
Graph edgeless(int n);
// K_{1,leaves} with the centre at 0.
Graph star(int leaves);
// K4 minus the edge 0-3.
Graph diamond();
// Two triangles sharing vertex 2.
Graph bowtie();
// K_k on 0..k-1 plus vertex k adjacent to k-1.
Graph complete_with_pendant(int k);

// Hexagon 0..5 with pendants 6, 7, 8, 9 at 0, 1, 2, 5: ipp 2, diameter 5.
Graph hexagon_with_four_pendants();
// The same graph minus hexagon vertex 4, renumbered: ipp 3.
Graph hexagon_with_four_pendants_minus_one();

// A clique glued onto a host graph at one vertex, leaving the clique a leaf
// block.
struct LeafCliqueFixture {
  std::string name;
  Graph graph;
  VertexSet clique;
  int cut_vertex;
};

// Cliques K3, K5, K7 attached to paths, cycles and C4 hosts.
std::vector<LeafCliqueFixture> leaf_clique_fixtures();

}  // namespace ippkit::named

#endif  // IPPKIT_NAMED_GRAPHS_H_

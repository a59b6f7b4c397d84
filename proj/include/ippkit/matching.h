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

#ifndef IPPKIT_MATCHING_H_
#define IPPKIT_MATCHING_H_

#include <optional>
#include <span>
#include <vector>

#include "ippkit/graph.h"
#include "ippkit/partition.h"

namespace ippkit {

// A set of pairwise vertex-disjoint vertex pairs. Edges are stored as
// (u, v) with u < v, sorted.
class Matching {
 public:
  Matching() = default;
  // Throws PreconditionError if two pairs share an endpoint or a pair is
  // degenerate.
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet saturated() const { return saturated_; }
  bool saturates(int v) const { return saturated_.contains(v); }

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
  VertexSet saturated_;
};

// Whether every pair of m is an edge of g.
bool is_matching_of(const Graph& g, const Matching& m);

// A maximum matching computed with Edmonds' blossom algorithm. Free
// vertices are grown in increasing id order.
Matching maximum_matching(const Graph& g);

// Same engine, growing free vertices in the given order (a permutation of
// the vertex ids). Different orders yield different maximum matchings.
Matching maximum_matching(const Graph& g, std::span<const int> vertex_order);

// Vertices not covered by m. Throws PreconditionError unless m is a
// matching of g.
VertexSet unsaturated_vertices(const Graph& g, const Matching& m);

// Each edge of m as a two-vertex path plus each unsaturated vertex as a
// one-vertex path; |V| - |m| paths. Throws PreconditionError unless m is a
// matching of g.
IsometricPathPartition matching_ipp(const Graph& g, const Matching& m);

// A perfect matching of g minus u, in g's vertex ids; nullopt if none.
// Throws PreconditionError if u is not a vertex of g.
std::optional<Matching> perfect_matching_avoiding(const Graph& g, int u);

// v is adjacent to exactly one endpoint of e. Throws PreconditionError if v
// is an endpoint of e or e is not an edge of g.
bool is_mixed_on_edge(const Graph& g, int v, Edge e);

}  // namespace ippkit

#endif  // IPPKIT_MATCHING_H_

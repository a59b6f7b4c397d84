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

// Simple undirected graphs on at most 64 vertices, hop distances and path
// predicates. Vertices are dense ids 0..n-1; every graph also carries the
// label of each vertex in the graph it was read from, so that subgraphs and
// components can be reported in input labeling.

#ifndef IPPKIT_GRAPH_H_
#define IPPKIT_GRAPH_H_

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ippkit/errors.h"

namespace ippkit {

// A set of vertex ids in 0..63.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet Single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }
  // {0, ..., n-1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  // Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  // Members in increasing order.
  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  VertexSet closed_neighborhood(int v) const {
    return adjacency_[v] | VertexSet::Single(v);
  }
  int degree(int v) const { return adjacency_[v].size(); }
  VertexSet vertices() const { return VertexSet::Range(order()); }

  // Unordered adjacent pairs as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Label of vertex v in the graph this one was derived from.
  int label(int v) const { return labels_[v]; }
  std::span<const int> labels() const { return labels_; }

  // The subgraph induced by a nonempty vertex set, renumbered in increasing
  // order of the original ids. Labels are inherited.
  Graph induced_subgraph(VertexSet keep) const;
  // G minus a proper subset of its vertices.
  Graph without(VertexSet removed) const;

  // Vertex sets of the connected components, ordered by lowest member.
  std::vector<VertexSet> components() const;
  bool is_connected() const;
  bool is_complete() const {
    return 2 * edge_count_ == order() * (order() - 1);
  }
  // Whether the given vertex set is pairwise adjacent.
  bool is_clique(VertexSet s) const;

  // Same adjacency on the same ids; labels are ignored.
  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  friend Graph from_edge_list(int n, std::span<const Edge> edges);
  friend Graph relabeled(const Graph& g, std::vector<int> labels);
  Graph(std::vector<VertexSet> adjacency, std::vector<int> labels);

  std::vector<VertexSet> adjacency_;
  std::vector<int> labels_;
  int edge_count_ = 0;
};

// Builds a graph with exactly the given edges; duplicates (in either
// orientation) are collapsed. Throws InvalidGraphError on n outside
// 1..64, an out-of-range endpoint or a self-loop.
Graph from_edge_list(int n, std::span<const Edge> edges);

// Same graph with its labels replaced.
Graph relabeled(const Graph& g, std::vector<int> labels);

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0-based ids. '#' starts a comment. Throws ParseError with a 1-based line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Hop distances between all pairs.
class DistanceMatrix {
 public:
  // Strictly larger than any distance realisable in a 64-vertex graph.
  static constexpr int kInfinite = 1 << 20;

  int order() const { return n_; }
  int operator()(int u, int v) const { return dist_[u * n_ + v]; }
  // Largest entry; kInfinite for a disconnected graph.
  int diameter() const { return diameter_; }

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  DistanceMatrix(int n, std::vector<int> dist, int diameter)
      : n_(n), dist_(std::move(dist)), diameter_(diameter) {}

  int n_ = 0;
  std::vector<int> dist_;
  int diameter_ = 0;
};

// Breadth-first search from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

// An ordered sequence of vertices; validity is checked against a graph.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  VertexSet vertex_set() const;
  bool has_endpoint(int v) const { return front() == v || back() == v; }

  bool operator==(const Path&) const = default;
};

// Whether p is nonempty, uses vertices of g, never repeats a vertex, and
// walks along edges.
bool is_valid_path(const Graph& g, const Path& p);
// Throws InvalidPathError unless is_valid_path.
void check_path(const Graph& g, const Path& p);

// length(p) equals the distance between its endpoints. Throws
// InvalidPathError on an invalid path.
bool is_isometric_path(const Graph& g, const DistanceMatrix& d,
                       const Path& p);
// No chord joins two non-consecutive vertices of p. Throws InvalidPathError
// on an invalid path.
bool is_induced_path(const Graph& g, const Path& p);

}  // namespace ippkit

#endif  // IPPKIT_GRAPH_H_

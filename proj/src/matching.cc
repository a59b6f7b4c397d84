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

#include "ippkit/matching.h"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ippkit {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v || u < 0 || v < 0 || u >= Graph::kMaxVertices ||
        v >= Graph::kMaxVertices) {
      throw PreconditionError("degenerate matching pair");
    }
    if (u > v) std::swap(u, v);
    if (saturated_.contains(u) || saturated_.contains(v)) {
      throw PreconditionError("matching pairs share an endpoint");
    }
    saturated_.insert(u);
    saturated_.insert(v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool is_matching_of(const Graph& g, const Matching& m) {
  return std::all_of(m.edges().begin(), m.edges().end(), [&](const Edge& e) {
    return e.second < g.order() && g.adjacent(e.first, e.second);
  });
}

namespace {

// Edmonds' algorithm: grow an alternating tree from each free root by
// breadth-first search, shrinking odd cycles (blossoms) onto their base.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_) {}

  std::vector<int> run(std::span<const int> order) {
    for (int root : order) {
      if (mate_[root] != -1) continue;
      int end = find_augmenting_path(root);
      if (end != -1) augment(end);
    }
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    std::queue<int> queue;
    in_tree_[root] = true;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v).to_vector()) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

Matching from_mates(const std::vector<int>& mate) {
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  }
  return Matching(std::move(edges));
}

void check_matching(const Graph& g, const Matching& m) {
  if (!is_matching_of(g, m)) {
    throw PreconditionError("matching uses a pair that is not an edge");
  }
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return maximum_matching(g, order);
}

Matching maximum_matching(const Graph& g, std::span<const int> vertex_order) {
  std::vector<int> sorted(vertex_order.begin(), vertex_order.end());
  std::sort(sorted.begin(), sorted.end());
  bool is_permutation = static_cast<int>(sorted.size()) == g.order();
  for (int i = 0; is_permutation && i < g.order(); ++i) {
    is_permutation = sorted[i] == i;
  }
  if (!is_permutation) {
    throw PreconditionError("vertex order is not a permutation of V(G)");
  }
  return from_mates(BlossomMatcher(g).run(vertex_order));
}

VertexSet unsaturated_vertices(const Graph& g, const Matching& m) {
  check_matching(g, m);
  return g.vertices() - m.saturated();
}

IsometricPathPartition matching_ipp(const Graph& g, const Matching& m) {
  check_matching(g, m);
  IsometricPathPartition ipp;
  for (const auto& [u, v] : m.edges()) ipp.paths.push_back(Path{{u, v}});
  for (int u : (g.vertices() - m.saturated()).to_vector()) {
    ipp.paths.push_back(Path{{u}});
  }
  ipp.normalize();
  return ipp;
}

std::optional<Matching> perfect_matching_avoiding(const Graph& g, int u) {
  if (u < 0 || u >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(u) + " not in graph");
  }
  if (g.order() == 1) return Matching();
  if (g.order() % 2 == 0) return std::nullopt;
  Graph rest = g.without(VertexSet::Single(u));
  Matching m = maximum_matching(rest);
  if (2 * m.size() != rest.order()) return std::nullopt;
  // rest renumbers vertices above u down by one.
  auto lift = [u](int v) { return v >= u ? v + 1 : v; };
  std::vector<Edge> edges;
  for (const auto& [a, b] : m.edges()) edges.emplace_back(lift(a), lift(b));
  return Matching(std::move(edges));
}

bool is_mixed_on_edge(const Graph& g, int v, Edge e) {
  const auto [x, y] = e;
  if (v == x || v == y) {
    throw PreconditionError("vertex is an endpoint of the edge");
  }
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y ||
      !g.adjacent(x, y)) {
    throw PreconditionError("pair is not an edge of the graph");
  }
  return g.adjacent(v, x) != g.adjacent(v, y);
}

}  // namespace ippkit

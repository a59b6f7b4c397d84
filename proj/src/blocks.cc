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

#include <algorithm>

namespace ippkit {

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError();
}

class LowpointSearch {
 public:
  explicit LowpointSearch(const Graph& g)
      : g_(g), discovery_(g.order(), -1), low_(g.order(), 0) {}

  BlockDecomposition run() {
    BlockDecomposition d;
    if (g_.order() == 1) {
      d.blocks.push_back(VertexSet::Single(0));
    } else {
      visit(0, -1, d);
    }
    std::sort(d.blocks.begin(), d.blocks.end(), [](VertexSet a, VertexSet b) {
      return a.to_vector() < b.to_vector();
    });
    for (int i = 0; i < d.block_count(); ++i) {
      VertexSet cuts = d.blocks[i] & d.cut_vertices;
      d.block_cut_tree.push_back(cuts);
      if (cuts.size() == 1) d.leaf_block_indices.push_back(i);
    }
    return d;
  }

 private:
  // Recursion depth is bounded by 64 vertices.
  void visit(int v, int parent, BlockDecomposition& d) {
    discovery_[v] = low_[v] = clock_++;
    int children = 0;
    for (int w : g_.neighbors(v).to_vector()) {
      if (w == parent) continue;
      if (discovery_[w] == -1) {
        edge_stack_.emplace_back(v, w);
        ++children;
        visit(w, v, d);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= discovery_[v]) {
          if (parent != -1 || children > 1) d.cut_vertices.insert(v);
          VertexSet block;
          while (true) {
            auto [a, b] = edge_stack_.back();
            edge_stack_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          d.blocks.push_back(block);
        }
      } else if (discovery_[w] < discovery_[v]) {
        edge_stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], discovery_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> discovery_;
  std::vector<int> low_;
  std::vector<Edge> edge_stack_;
  int clock_ = 0;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  require_connected(g);
  return LowpointSearch(g).run();
}

bool is_biconnected(const Graph& g) {
  return g.is_connected() && block_decomposition(g).cut_vertices.empty();
}

bool is_block_graph(const Graph& g) {
  BlockDecomposition d = block_decomposition(g);
  return std::all_of(d.blocks.begin(), d.blocks.end(),
                     [&](VertexSet b) { return g.is_clique(b); });
}

bool is_diamond_free(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) edges += g.adjacent(q[i], q[j]);
          }
          if (edges == 5) return false;
        }
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search numbers vertices n-1 down to 0; the reverse
  // of the visiting order is a perfect elimination ordering iff g is chordal.
  std::vector<int> weight(n, 0);
  std::vector<int> order;
  VertexSet numbered;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v : (g.vertices() - numbered).to_vector()) {
      if (best == -1 || weight[v] > weight[best]) best = v;
    }
    order.push_back(best);
    numbered.insert(best);
    for (int w : (g.neighbors(best) - numbered).to_vector()) ++weight[w];
  }
  // Visiting order reversed: for each vertex v, its neighbours visited
  // earlier must form a clique. It suffices to check that they are all
  // adjacent to the latest-visited one among them.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet earlier;
    for (int w : g.neighbors(v).to_vector()) {
      if (position[w] < i) earlier.insert(w);
    }
    if (earlier.empty()) continue;
    int parent = -1;
    for (int w : earlier.to_vector()) {
      if (parent == -1 || position[w] > position[parent]) parent = w;
    }
    earlier.erase(parent);
    if (!earlier.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

bool is_diamond_free_chordal(const Graph& g) {
  require_connected(g);
  return is_diamond_free(g) && is_chordal(g);
}

int count_even_blocks(const BlockDecomposition& d) {
  return static_cast<int>(std::count_if(d.blocks.begin(), d.blocks.end(),
                                        [](VertexSet b) { return b.size() % 2 == 0; }));
}

}  // namespace ippkit

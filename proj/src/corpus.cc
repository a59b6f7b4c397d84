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

#include "ippkit/corpus.h"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "ippkit/graph6.h"

namespace ippkit {

namespace {

// Colour classes after iterated degree refinement, as vertex lists in an
// isomorphism-invariant order.
std::vector<std::vector<int>> refined_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, 0);
  int colours = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> signatures(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colour[v]};
      std::vector<int> around;
      for (int w : g.neighbors(v).to_vector()) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      signatures[v] = {std::move(sig), v};
    }
    std::vector<std::vector<int>> distinct;
    for (const auto& [sig, v] : signatures) distinct.push_back(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(),
                           signatures[v].first) -
          distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == colours) break;
    colours = next;
  }
  std::vector<std::vector<int>> cells(colours);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

// Upper triangle, column by column, first pair most significant.
std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(order.size());
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<std::vector<int>> cells)
      : g_(g), cells_(std::move(cells)) {
    for (auto& cell : cells_) std::sort(cell.begin(), cell.end());
  }

  std::vector<int> run() {
    visit(0);
    return best_order_;
  }

 private:
  void visit(std::size_t cell) {
    if (cell == cells_.size()) {
      std::vector<int> order;
      for (const auto& c : cells_) order.insert(order.end(), c.begin(), c.end());
      std::uint64_t code = adjacency_code(g_, order);
      if (best_order_.empty() || code > best_code_) {
        best_code_ = code;
        best_order_ = std::move(order);
      }
      return;
    }
    do {
      visit(cell + 1);
    } while (std::next_permutation(cells_[cell].begin(), cells_[cell].end()));
  }

  const Graph& g_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> best_order_;
  std::uint64_t best_code_ = 0;
};

Graph permuted(const Graph& g, const std::vector<int>& order) {
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return from_edge_list(g.order(), edges);
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw PreconditionError("canonical form limited to 10 vertices");
  }
  std::vector<int> order = CanonicalSearch(g, refined_cells(g)).run();
  return encode_graph6(permuted(g, order));
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) {
    throw PreconditionError("exhaustive generation supports 1..8 vertices");
  }
  std::vector<Graph> level{from_edge_list(1, {})};
  for (int order = 2; order <= n; ++order) {
    // Every graph on `order` vertices is a smaller one plus a vertex.
    std::map<std::pair<int, std::string>, Graph> seen;
    const int fresh = order - 1;
    for (const Graph& base : level) {
      const std::vector<Edge> base_edges = base.edges();
      for (std::uint32_t nbrs = 0; nbrs < (1u << fresh); ++nbrs) {
        std::vector<Edge> edges = base_edges;
        for (int w = 0; w < fresh; ++w) {
          if ((nbrs >> w) & 1) edges.emplace_back(w, fresh);
        }
        Graph candidate = from_edge_list(order, edges);
        std::string key = canonical_graph6(candidate);
        auto slot = std::make_pair(candidate.edge_count(), key);
        if (!seen.contains(slot)) seen.emplace(slot, decode_graph6(key));
      }
    }
    level.clear();
    for (auto& [key, graph] : seen) level.push_back(std::move(graph));
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CorpusEntry> read_graph6_corpus(std::istream& in,
                                            const std::string& source) {
  std::vector<CorpusEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string code;
    if (!(fields >> code) || code.front() == '#') continue;
    CorpusEntry entry{from_edge_list(1, {}), source + ":" + std::to_string(line_no),
                      std::nullopt};
    try {
      entry.graph = decode_graph6(code);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    int expected = 0;
    if (fields >> expected) {
      entry.expected_ipp = expected;
    } else if (!fields.eof()) {
      throw ParseError("second column must be an integer", line_no);
    }
    std::string extra;
    fields.clear();
    if (fields >> extra) throw ParseError("unexpected third column", line_no);
    out.push_back(std::move(entry));
  }
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int n = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    for (const auto& [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
    n += part.order();
  }
  return from_edge_list(n, edges);
}

Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code) c = pick(rng);
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] != 1) continue;
      if (u == -1) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  std::bernoulli_distribution coin(extra_edge_p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return from_edge_list(n, edges);
}

}  // namespace ippkit

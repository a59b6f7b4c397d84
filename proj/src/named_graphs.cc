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

#include "ippkit/named_graphs.h"

namespace ippkit::named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edge_list(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return from_edge_list(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return from_edge_list(n, edges);
}

Graph edgeless(int n) { return from_edge_list(n, {}); }

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return from_edge_list(leaves + 1, edges);
}

Graph diamond() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  return from_edge_list(4, edges);
}

Graph bowtie() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2},
                                {2, 3}, {2, 4}, {3, 4}};
  return from_edge_list(5, edges);
}

Graph complete_with_pendant(int k) {
  std::vector<Edge> edges = complete(k).edges();
  edges.emplace_back(k - 1, k);
  return from_edge_list(k + 1, edges);
}

Graph hexagon_with_four_pendants() {
  std::vector<Edge> edges = cycle(6).edges();
  edges.insert(edges.end(), {{0, 6}, {1, 7}, {2, 8}, {5, 9}});
  return from_edge_list(10, edges);
}

Graph hexagon_with_four_pendants_minus_one() {
  return hexagon_with_four_pendants().without(VertexSet::Single(4));
}

namespace {

// Host on 0..h-1, clique on k new vertices plus host vertex `at`.
LeafCliqueFixture glue(const std::string& host_name, const Graph& host,
                       int at, int k) {
  const int h = host.order();
  std::vector<Edge> edges = host.edges();
  VertexSet clique = VertexSet::Single(at);
  std::vector<int> members{at};
  for (int i = 0; i < k - 1; ++i) {
    members.push_back(h + i);
    clique.insert(h + i);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.emplace_back(members[i], members[j]);
    }
  }
  return {"K" + std::to_string(k) + "@" + host_name + "[" +
              std::to_string(at) + "]",
          from_edge_list(h + k - 1, edges), clique, at};
}

}  // namespace

std::vector<LeafCliqueFixture> leaf_clique_fixtures() {
  struct Host {
    std::string name;
    Graph graph;
    std::vector<int> anchors;
  };
  const std::vector<Host> hosts{
      {"P2", path(2), {0}},         {"P3", path(3), {0, 1}},
      {"P4", path(4), {0, 1}},      {"C3", cycle(3), {0}},
      {"C4", cycle(4), {0}},        {"C5", cycle(5), {0}},
      {"C6", cycle(6), {0}},        {"diamond", diamond(), {0, 1}},
  };
  std::vector<LeafCliqueFixture> out;
  for (int k : {3, 5, 7}) {
    for (const Host& host : hosts) {
      for (int at : host.anchors) out.push_back(glue(host.name, host.graph, at, k));
    }
  }
  return out;
}

}  // namespace ippkit::named

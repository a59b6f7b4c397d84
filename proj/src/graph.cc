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

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>
#include <sstream>

namespace ippkit {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

Graph::Graph(std::vector<VertexSet> adjacency, std::vector<int> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  int degree_sum = 0;
  for (const VertexSet& nb : adjacency_) degree_sum += nb.size();
  edge_count_ = degree_sum / 2;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw InvalidGraphError("vertex count " + std::to_string(n) +
                            " outside 1.." +
                            std::to_string(Graph::kMaxVertices));
  }
  std::vector<VertexSet> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidGraphError("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") has an endpoint outside 0.." +
                              std::to_string(n - 1));
    }
    if (u == v) {
      throw InvalidGraphError("self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].insert(v);
    adjacency[v].insert(u);
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Graph(std::move(adjacency), std::move(labels));
}

Graph relabeled(const Graph& g, std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != g.order()) {
    throw InvalidGraphError("label count does not match vertex count");
  }
  return Graph(g.adjacency_, std::move(labels));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u].to_vector()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(VertexSet keep) const {
  if (keep.empty() || !keep.is_subset_of(vertices())) {
    throw InvalidGraphError("induced subgraph needs a nonempty vertex subset");
  }
  std::vector<int> old_ids = keep.to_vector();
  std::vector<int> new_id(order(), -1);
  for (int i = 0; i < static_cast<int>(old_ids.size()); ++i) {
    new_id[old_ids[i]] = i;
  }
  std::vector<VertexSet> adjacency(old_ids.size());
  std::vector<int> labels(old_ids.size());
  for (int i = 0; i < static_cast<int>(old_ids.size()); ++i) {
    labels[i] = labels_[old_ids[i]];
    for (int w : (adjacency_[old_ids[i]] & keep).to_vector()) {
      adjacency[i].insert(new_id[w]);
    }
  }
  return Graph(std::move(adjacency), std::move(labels));
}

Graph Graph::without(VertexSet removed) const {
  return induced_subgraph(vertices() - removed);
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    VertexSet component = VertexSet::Single(unseen.first());
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.to_vector()) next |= adjacency_[v];
      frontier = next - component;
      component |= frontier;
    }
    out.push_back(component);
    unseen -= component;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() == 1; }

bool Graph::is_clique(VertexSet s) const {
  for (int v : s.to_vector()) {
    if (!(s - VertexSet::Single(v)).is_subset_of(adjacency_[v])) return false;
  }
  return true;
}

namespace {

std::string strip_comment(const std::string& line) {
  return line.substr(0, line.find('#'));
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Reads exactly two integers from a line, nothing else.
bool read_pair(const std::string& s, long long& a, long long& b) {
  std::istringstream in(s);
  if (!(in >> a >> b)) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (is_blank(body)) continue;
    long long a = 0;
    long long b = 0;
    if (!read_pair(body, a, b)) {
      throw ParseError("expected two integers, got '" + line + "'", line_no);
    }
    if (n < 0) {
      if (a < 1 || a > Graph::kMaxVertices || b < 0) {
        throw ParseError("bad header '" + line + "'", line_no);
      }
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError("more edge lines than the header declares", line_no);
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError("vertex id out of range in '" + line + "'", line_no);
    }
    if (a == b) throw ParseError("self-loop in '" + line + "'", line_no);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw ParseError("missing 'n m' header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()),
                     line_no);
  }
  return from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n) * n,
                        DistanceMatrix::kInfinite);
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    int* row = &dist[static_cast<std::size_t>(s) * n];
    row[s] = 0;
    VertexSet seen = VertexSet::Single(s);
    VertexSet frontier = seen;
    for (int level = 1; !frontier.empty(); ++level) {
      VertexSet next;
      for (int v : frontier.to_vector()) next |= g.neighbors(v);
      next -= seen;
      for (int v : next.to_vector()) row[v] = level;
      seen |= next;
      frontier = next;
    }
    diameter = std::max(diameter, *std::max_element(row, row + n));
  }
  return DistanceMatrix(n, std::move(dist), diameter);
}

VertexSet Path::vertex_set() const {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    seen.insert(v);
  }
  return true;
}

void check_path(const Graph& g, const Path& p) {
  if (!is_valid_path(g, p)) {
    throw InvalidPathError(
        "vertex sequence is empty, repeats a vertex, leaves the graph or "
        "uses a non-edge");
  }
}

bool is_isometric_path(const Graph& g, const DistanceMatrix& d,
                       const Path& p) {
  check_path(g, p);
  return d(p.front(), p.back()) == p.length();
}

bool is_induced_path(const Graph& g, const Path& p) {
  check_path(g, p);
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 2; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace ippkit

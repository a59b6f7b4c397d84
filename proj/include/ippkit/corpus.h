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

// Small-graph corpora: isomorph-free exhaustive generation, graph6 corpus
// files and random instances.

#ifndef IPPKIT_CORPUS_H_
#define IPPKIT_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ippkit/graph.h"

namespace ippkit {

inline constexpr int kCanonicalMaxOrder = 10;

// Canonical graph6 string: equal for two graphs iff they are isomorphic.
// Computed as the lexicographically largest adjacency code over all
// labelings compatible with an equitable colour refinement. Throws
// PreconditionError when n > 10.
std::string canonical_graph6(const Graph& g);

// One representative per isomorphism class on n vertices (1 <= n <= 8),
// sorted by edge count, then by canonical string. Representatives are in
// canonical labeling.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

struct CorpusEntry {
  Graph graph;
  // "<source>:<line>".
  std::string id;
  // Optional second column: a claimed ipp value.
  std::optional<int> expected_ipp;
};

// One graph6 string per line, optionally followed by whitespace and an
// integer. Blank lines and lines starting with '#' are skipped. Throws
// ParseError with the line number.
std::vector<CorpusEntry> read_graph6_corpus(std::istream& in,
                                            const std::string& source);

// Graphs in the order given, each separated components preserved.
Graph disjoint_union(std::span<const Graph> parts);

// A uniformly random labelled tree (Pruefer sequence) on n vertices with each
// remaining pair added independently with probability extra_edge_p.
Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng);

}  // namespace ippkit

#endif  // IPPKIT_CORPUS_H_

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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ippkit/blocks.h"
#include "ippkit/cli.h"
#include "ippkit/corpus.h"
#include "ippkit/extremal.h"
#include "ippkit/graph6.h"
#include "ippkit/ipp_solver.h"
#include "ippkit/matching.h"
#include "ippkit/named_graphs.h"

namespace ippkit {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Report {
  int failed = 0;

  void line(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
                what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
};

struct CorpusGraph {
  Graph graph;
  int nu = 0;
  int oracle = 0;
};

std::vector<CorpusGraph> load_bundled(int n) {
  std::ifstream in(std::string(IPPKIT_TEST_DATA_DIR) + "/corpus/connected_n" +
                   std::to_string(n) + ".g6");
  std::vector<CorpusGraph> out;
  for (CorpusEntry& e : read_graph6_corpus(in, "n" + std::to_string(n))) {
    out.push_back({std::move(e.graph), 0, 0});
  }
  return out;
}

int solve(const Graph& g) { return ipp_exact(g).partition.size(); }

int nu_of(const Graph& g) { return maximum_matching(g).size(); }

std::string counts(int checked, int bad, const std::string& noun = "graphs") {
  return std::to_string(checked) + " " + noun + " checked, " +
         std::to_string(bad) + " violations";
}

// Minimum IPP of an arbitrary (possibly disconnected) graph without splitting
// it into components: Floyd-Warshall distances, every isometric vertex
// sequence by DFS, then a memoized cover of the lowest uncovered vertex.
int whole_graph_optimum(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u).to_vector()) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::set<std::uint64_t> path_sets;
  std::vector<int> walk;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t used) {
    const int here = walk.back();
    path_sets.insert(used);
    for (int w : g.neighbors(here).to_vector()) {
      if ((used >> w) & 1) continue;
      walk.push_back(w);
      // Every prefix must stay a geodesic from the start.
      if (d[walk.front()][w] == static_cast<int>(walk.size()) - 1) {
        extend(used | (std::uint64_t{1} << w));
      }
      walk.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    walk = {s};
    extend(std::uint64_t{1} << s);
  }
  std::vector<std::vector<std::uint64_t>> through(n);
  for (std::uint64_t p : path_sets) {
    for (int v = 0; v < n; ++v) {
      if ((p >> v) & 1) through[v].push_back(p);
    }
  }
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(std::uint64_t)> best = [&](std::uint64_t rest) -> int {
    if (rest == 0) return 0;
    auto it = memo.find(rest);
    if (it != memo.end()) return it->second;
    const int low = std::countr_zero(rest);
    int result = n + 1;
    for (std::uint64_t p : through[low]) {
      if ((p & rest) == p) result = std::min(result, 1 + best(rest & ~p));
    }
    memo.emplace(rest, result);
    return result;
  };
  return best(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace
}  // namespace ippkit

int main() {
  using namespace ippkit;
  Report report;

  // 1. Hexagon fixtures.
  {
    auto start = Clock::now();
    auto load = [](const std::string& name) {
      std::ifstream in(std::string(IPPKIT_TEST_DATA_DIR) + "/fixtures/" + name);
      return parse_edge_list(in);
    };
    const int g = solve(load("hexagon_pendants.el"));
    const int h = solve(load("hexagon_pendants_minus_one.el"));
    const double t = seconds_since(start);
    report.line(1, g == 2 && h == 3 && t < 1.0, "hexagon fixtures",
                "ipp(G)=" + std::to_string(g) + ", ipp(H)=" + std::to_string(h) +
                    ", " + std::to_string(t) + " s");
  }

  std::vector<std::vector<CorpusGraph>> corpus(9);
  for (int n = 1; n <= 8; ++n) corpus[n] = load_bundled(n);
  auto every = [&](int max_n, const std::function<void(CorpusGraph&)>& fn) {
    for (int n = 1; n <= max_n; ++n) {
      for (CorpusGraph& c : corpus[n]) fn(c);
    }
  };

  // 2. Classifier against brute force.
  {
    int checked = 0;
    int bad = 0;
    double small_time = 0;
    auto start = Clock::now();
    for (int n = 1; n <= 8; ++n) {
      for (CorpusGraph& c : corpus[n]) {
        c.nu = nu_of(c.graph);
        c.oracle = ipp_bruteforce_oracle(c.graph);
        const bool extremal = classify(c.graph).verdict == Verdict::kExtremal;
        bad += extremal != (c.oracle == c.graph.order() - c.nu);
        ++checked;
      }
      if (n == 7) small_time = seconds_since(start);
    }
    const double total = seconds_since(start);
    const bool sizes = corpus[8].size() == 11117 && checked == 12113;
    report.line(2, bad == 0 && sizes && small_time < 120 && total < 1800,
                "classifier equivalence, n <= 8",
                counts(checked, bad) + ", n<=7 in " + std::to_string(small_time) +
                    " s, n<=8 in " + std::to_string(total) + " s");
  }

  // 3. Sandwich.
  std::vector<std::vector<int>> exact_values(9);
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      const int x = solve(c.graph);
      const int lb = ipp_lower_bound(c.graph, all_pairs_distances(c.graph));
      bad += !(lb <= x && x <= c.graph.order() - c.nu);
      exact_values[c.graph.order()].push_back(x);
      ++checked;
    });
    report.line(3, bad == 0, "lower and matching bounds", counts(checked, bad));
  }

  // 4. Exact solver against brute force.
  {
    int checked = 0;
    int bad = 0;
    for (int n = 1; n <= 7; ++n) {
      for (std::size_t i = 0; i < corpus[n].size(); ++i) {
        bad += exact_values[n][i] != corpus[n][i].oracle;
        ++checked;
      }
    }
    std::mt19937_64 rng(20261018);
    const double densities[] = {0.05, 0.15, 0.3, 0.5};
    for (int i = 0; i < 500; ++i) {
      Graph g = random_connected_graph(8 + i % 3, densities[(i / 3) % 4], rng);
      bad += solve(g) != ipp_bruteforce_oracle(g);
      ++checked;
    }
    report.line(4, bad == 0, "exact solver vs brute force",
                counts(checked, bad));
  }

  // 5. Disconnected graphs.
  {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> parts_dist(2, 4);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<Graph> parts;
      const int k = parts_dist(rng);
      for (int j = 0; j < k; ++j) {
        parts.push_back(random_connected_graph(size_dist(rng), density(rng), rng));
      }
      Graph g = disjoint_union(parts);
      int sum = 0;
      bool all_extremal = true;
      for (const Graph& p : parts) {
        sum += ipp_bruteforce_oracle(p);
        all_extremal =
            all_extremal && classify(p).verdict == Verdict::kExtremal;
      }
      const int whole = whole_graph_optimum(g);
      const bool whole_extremal = whole == g.order() - nu_of(g);
      const Verdict global = classify_components(g).verdict;
      bad += whole != sum || whole != ipp_exact_by_components(g).partition.size() ||
             whole_extremal != all_extremal ||
             (global == Verdict::kExtremal) != all_extremal;
    }
    report.line(5, bad == 0, "disconnected graphs", counts(200, bad));
  }

  // 6. Parity of even blocks.
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      const int k = count_even_blocks(block_decomposition(c.graph));
      bad += (c.graph.order() - (k + 1)) % 2 != 0;
      ++checked;
    });
    report.line(6, bad == 0, "even block parity", counts(checked, bad));
  }

  // 7. Block graph recognition.
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      bad += is_block_graph(c.graph) != is_diamond_free_chordal(c.graph);
      ++checked;
    });
    report.line(7, bad == 0, "block graphs are diamond-free chordal",
                counts(checked, bad));
  }

  // 8. Block graphs: extremal iff at most one even block.
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      if (!is_block_graph(c.graph)) return;
      const bool extremal = c.oracle == c.graph.order() - c.nu;
      const int even = count_even_blocks(block_decomposition(c.graph));
      bad += extremal != (even <= 1);
      ++checked;
    });
    report.line(8, bad == 0, "block graph extremality", counts(checked, bad));
  }

  // 9. Constructions for extremal graphs.
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      ExtremalityCertificate cert = classify(c.graph);
      if (cert.verdict != Verdict::kExtremal) return;
      IsometricPathPartition p = construct_minimum_ipp_extremal(c.graph, cert);
      bad += !verify_ipp(c.graph, all_pairs_distances(c.graph), p).valid() ||
             p.size() != c.graph.order() - c.nu || p.size() != c.oracle;
      ++checked;
    });
    report.line(9, bad == 0 && checked > 0, "matching constructions",
                counts(checked, bad));
  }

  // 10. Leaf clique pair reduction.
  {
    int checked = 0;
    int bad = 0;
    auto ipp_of = [](const Graph& g) {
      return g.order() <= kOracleMaxOrder ? ipp_bruteforce_oracle(g) : solve(g);
    };
    for (const auto& f : named::leaf_clique_fixtures()) {
      const int ipp_g = ipp_of(f.graph);
      const int nu_g = nu_of(f.graph);
      std::vector<int> free =
          (f.clique - VertexSet::Single(f.cut_vertex)).to_vector();
      for (std::size_t a = 0; a < free.size(); ++a) {
        for (std::size_t b = a + 1; b < free.size(); ++b) {
          Graph r = reduce_leaf_clique_pair(f.graph, f.clique, free[a], free[b]);
          bad += ipp_g != ipp_of(r) + 1 || nu_g != nu_of(r) + 1;
          ++checked;
        }
      }
    }
    report.line(10, bad == 0 && checked > 0, "leaf clique pair reduction",
                counts(checked, bad, "pairs (x, y)"));
  }

  // 11. v-extendable partitions.
  {
    int checked = 0;
    int bad = 0;
    every(8, [&](CorpusGraph& c) {
      const Graph& g = c.graph;
      if (g.order() < 2 || !is_biconnected(g) || c.oracle > c.nu) return;
      DistanceMatrix d = all_pairs_distances(g);
      for (int v = 0; v < g.order(); ++v) {
        if (!perfect_matching_avoiding(g, v)) continue;
        auto found = find_v_extendable_ipp(g, v);
        bool ok = found && found->size() <= c.nu && verify_ipp(g, d, *found).valid();
        if (ok) {
          ok = std::any_of(found->paths.begin(), found->paths.end(),
                           [v](const Path& p) { return p.has_endpoint(v); });
        }
        bad += !ok;
        ++checked;
      }
    });
    report.line(11, bad == 0 && checked > 0, "v-extendable partitions",
                counts(checked, bad, "pairs (G, v)"));
  }

  // 12. Survey over the connected 4-vertex graphs.
  {
    std::string input;
    for (const CorpusGraph& c : corpus[4]) input += encode_graph6(c.graph) + "\n";
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const char* argv[] = {"ippkit", "survey", "-"};
    const int code = cli::run(3, argv, in, out, err);
    std::set<std::string> got;
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line)) {
      auto record = nlohmann::json::parse(line);
      got.insert(canonical_graph6(decode_graph6(record["graph6"].get<std::string>())));
    }
    std::set<std::string> want{canonical_graph6(named::cycle(4)),
                               canonical_graph6(named::diamond()),
                               canonical_graph6(named::complete(4))};
    report.line(12, code == 0 && got == want, "survey on four vertices",
                std::to_string(got.size()) + " reported, C4/diamond/K4 expected");
  }

  std::printf("%d of 12 criteria passed\n", 12 - report.failed);
  return report.failed == 0 ? 0 : 1;
}

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

#include "ippkit/invariants.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "ippkit/blocks.h"
#include "ippkit/extremal.h"
#include "ippkit/graph6.h"

namespace ippkit {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kExtremalClassification:
      return "extremal-classification";
    case Suite::kSandwich:
      return "matching-sandwich";
    case Suite::kOracleAgreement:
      return "oracle-agreement";
    case Suite::kBlockParity:
      return "block-parity";
    case Suite::kBlockGraphRecognition:
      return "block-graph-recognition";
    case Suite::kOddExtremalStructure:
      return "odd-extremal-structure";
    case Suite::kEvenExtremalStructure:
      return "even-extremal-structure";
    case Suite::kBlockGraphExtremality:
      return "block-graph-extremality";
    case Suite::kExtremalConstruction:
      return "extremal-construction";
    case Suite::kUnsaturatedNotMixed:
      return "unsaturated-not-mixed";
    case Suite::kPerfectMatchingAvoiding:
      return "perfect-matching-avoiding";
    case Suite::kVExtendable:
      return "v-extendable";
    case Suite::kBlockSizes:
      return "block-sizes";
    case Suite::kCertificates:
      return "certificates";
    case Suite::kExpectedValues:
      return "expected-values";
  }
  return "unknown";
}

std::vector<Matching> all_maximum_matchings(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<std::vector<Edge>> found;
  std::vector<Edge> current;
  std::size_t best = 0;
  std::function<void(std::size_t, VertexSet)> extend =
      [&](std::size_t next, VertexSet used) {
        if (current.size() > best) {
          best = current.size();
          found.clear();
        }
        if (current.size() == best) found.push_back(current);
        for (std::size_t i = next; i < edges.size(); ++i) {
          const auto [u, v] = edges[i];
          if (used.contains(u) || used.contains(v)) continue;
          current.push_back(edges[i]);
          extend(i + 1, used | VertexSet::Single(u) | VertexSet::Single(v));
          current.pop_back();
        }
      };
  extend(0, VertexSet());
  std::vector<Matching> out;
  for (auto& m : found) out.emplace_back(std::move(m));
  return out;
}

namespace {

constexpr int kSuiteCount = static_cast<int>(std::size(kAllSuites));

struct Outcome {
  bool applicable = false;
  bool failed = false;
  bool exhausted = false;
  std::string detail;
};

using Outcomes = std::array<Outcome, kSuiteCount>;

Outcome& at(Outcomes& o, Suite s) { return o[static_cast<int>(s)]; }

void expect(Outcome& o, bool ok, const std::string& why) {
  o.applicable = true;
  if (!ok && !o.failed) {
    o.failed = true;
    o.detail = why;
  }
}

void mark_exhausted(Outcome& o) {
  o.applicable = true;
  o.exhausted = true;
}

std::string str(int v) { return std::to_string(v); }

// Maximum matchings used to exercise the "any maximum matching" statements.
std::vector<Matching> sample_maximum_matchings(const Graph& g,
                                               const SuiteOptions& options,
                                               std::uint64_t seed) {
  if (g.order() <= options.enumerate_matchings_up_to) {
    return all_maximum_matchings(g);
  }
  const int n = g.order();
  std::vector<Matching> out;
  std::vector<int> order(n);
  for (int start = 0; start < n; ++start) {
    for (int i = 0; i < n; ++i) order[i] = (start + i) % n;
    out.push_back(maximum_matching(g, order));
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < options.extra_matching_orders; ++k) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    out.push_back(maximum_matching(g, order));
  }
  return out;
}

Outcomes evaluate(const CorpusEntry& entry, const SuiteOptions& options) {
  Outcomes o;
  const Graph& g = entry.graph;
  const int n = g.order();

  std::optional<int> exact_ipp;
  std::optional<SolveResult> solved;
  try {
    solved = ipp_exact_by_components(g, options.solver);
    if (solved->proven) exact_ipp = solved->partition.size();
  } catch (const BudgetExhaustedError&) {
  }

  if (entry.expected_ipp) {
    Outcome& e = at(o, Suite::kExpectedValues);
    if (!exact_ipp) {
      mark_exhausted(e);
    } else {
      expect(e, *exact_ipp == *entry.expected_ipp,
             "expected ipp " + str(*entry.expected_ipp) + ", solver found " +
                 str(*exact_ipp));
    }
  }
  if (!g.is_connected()) return o;

  const Matching matching = maximum_matching(g);
  const int nu = matching.size();
  const int bound = n - nu;
  const DistanceMatrix dist = all_pairs_distances(g);
  const BlockDecomposition blocks = block_decomposition(g);
  const bool block_graph = is_block_graph(g);

  std::optional<int> oracle;
  if (n <= kOracleMaxOrder) oracle = ipp_bruteforce_oracle(g);
  // The brute force where available, otherwise the exact solver.
  const std::optional<int> reference = oracle ? oracle : exact_ipp;

  // Block-level facts, all solver free.
  {
    const int even = count_even_blocks(blocks);
    expect(at(o, Suite::kBlockParity), n % 2 == (even + 1) % 2,
           "|V| = " + str(n) + ", even blocks = " + str(even));
    const bool forbidden_free = is_diamond_free_chordal(g);
    expect(at(o, Suite::kBlockGraphRecognition), block_graph == forbidden_free,
           std::string("block graph: ") + (block_graph ? "yes" : "no") +
               ", diamond-free chordal: " + (forbidden_free ? "yes" : "no"));
    int sum = 0;
    for (VertexSet b : blocks.blocks) sum += b.size() - 1;
    expect(at(o, Suite::kBlockSizes), sum == n - 1,
           "sum of (|B| - 1) = " + str(sum));
  }

  ExtremalityCertificate cert = classify(g, options.solver);
  {
    std::string problem = check_certificate(g, cert, options.solver);
    expect(at(o, Suite::kCertificates), problem.empty(), problem);
  }

  if (solved) {
    IppVerdict v = verify_ipp(g, dist, solved->partition);
    const int lower = ipp_lower_bound(g, dist);
    const int size = solved->partition.size();
    expect(at(o, Suite::kSandwich), v.valid() && lower <= size && size <= bound,
           std::string(to_string(v.defect)) + ": " + str(lower) + " <= " +
               str(size) + " <= " + str(bound) + " violated");
  } else {
    mark_exhausted(at(o, Suite::kSandwich));
  }

  if (oracle) {
    if (exact_ipp) {
      expect(at(o, Suite::kOracleAgreement), *exact_ipp == *oracle,
             "exact " + str(*exact_ipp) + " vs brute force " + str(*oracle));
    } else {
      mark_exhausted(at(o, Suite::kOracleAgreement));
    }
  }

  if (!reference) {
    mark_exhausted(at(o, Suite::kExtremalClassification));
    return o;
  }
  const bool extremal = *reference == bound;

  if (cert.verdict == Verdict::kUndecided) {
    mark_exhausted(at(o, Suite::kExtremalClassification));
  } else {
    expect(at(o, Suite::kExtremalClassification),
           (cert.verdict == Verdict::kExtremal) == extremal,
           std::string("classify says ") + to_string(cert.verdict) +
               ", ipp = " + str(*reference) + ", |V| - nu = " + str(bound));
  }

  if (block_graph) {
    const int even = count_even_blocks(blocks);
    expect(at(o, Suite::kBlockGraphExtremality), extremal == (even <= 1),
           "even blocks = " + str(even) +
               (extremal ? ", extremal" : ", not extremal"));
  }

  if (!extremal) return o;

  int bad = 0;
  int bad_even = 0;
  for (VertexSet b : blocks.blocks) {
    if (b.size() % 2 == 1 && g.is_clique(b)) continue;
    ++bad;
    if (b.size() % 2 == 0) ++bad_even;
  }
  if (n % 2 == 1) {
    expect(at(o, Suite::kOddExtremalStructure),
           bad == 0 && block_graph && is_diamond_free_chordal(g),
           str(bad) + " blocks not odd complete");
    Outcome& pma = at(o, Suite::kPerfectMatchingAvoiding);
    for (int u = 0; u < n; ++u) {
      expect(pma, perfect_matching_avoiding(g, u).has_value(),
             "G - " + str(u) + " has no perfect matching");
    }
  } else {
    expect(at(o, Suite::kEvenExtremalStructure), bad == 1 && bad_even == 1,
           str(bad) + " blocks not odd complete, " + str(bad_even) + " even");
  }

  {
    Outcome& c = at(o, Suite::kExtremalConstruction);
    ExtremalityCertificate claimed;
    claimed.verdict = Verdict::kExtremal;
    try {
      IsometricPathPartition built = construct_minimum_ipp_extremal(g, claimed);
      IppVerdict v = verify_ipp(g, dist, built);
      expect(c, v.valid() && built.size() == bound && built.size() == *reference,
             std::string(to_string(v.defect)) + ", size " + str(built.size()));
    } catch (const PreconditionError& e) {
      expect(c, false, e.what());
    }
  }

  {
    Outcome& m = at(o, Suite::kUnsaturatedNotMixed);
    const std::uint64_t seed =
        std::hash<std::string>{}(encode_graph6(g));
    for (const Matching& mm : sample_maximum_matchings(g, options, seed)) {
      VertexSet free = unsaturated_vertices(g, mm);
      expect(m, free.size() <= 1,
             str(free.size()) + " unsaturated vertices");
      for (int u : free.to_vector()) {
        for (const Edge& e : mm.edges()) {
          expect(m, !is_mixed_on_edge(g, u, e),
                 str(u) + " mixed on " + str(e.first) + "-" + str(e.second));
        }
      }
    }
  }
  return o;
}

// v-extendable partitions; independent of extremality.
void evaluate_v_extendable(const CorpusEntry& entry,
                           const SuiteOptions& options, Outcomes& o) {
  const Graph& g = entry.graph;
  if (!g.is_connected() || g.order() < 2 || !is_biconnected(g)) return;
  const int nu = maximum_matching(g).size();
  Outcome& out = at(o, Suite::kVExtendable);
  int ipp = 0;
  try {
    SolveResult solved = ipp_exact(g, options.solver);
    if (!solved.proven) {
      mark_exhausted(out);
      return;
    }
    ipp = solved.partition.size();
  } catch (const BudgetExhaustedError&) {
    mark_exhausted(out);
    return;
  }
  if (ipp > nu) return;
  const DistanceMatrix dist = all_pairs_distances(g);
  for (int v = 0; v < g.order(); ++v) {
    if (!perfect_matching_avoiding(g, v)) continue;
    try {
      auto found = find_v_extendable_ipp(g, v, options.solver);
      bool ok = found && verify_ipp(g, dist, *found).valid() &&
                found->size() <= nu;
      if (ok) {
        ok = std::any_of(found->paths.begin(), found->paths.end(),
                         [v](const Path& p) { return p.has_endpoint(v); });
      }
      expect(out, ok, "no v-extendable IPP for v = " + str(v));
    } catch (const BudgetExhaustedError&) {
      mark_exhausted(out);
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(std::span<const CorpusEntry> corpus,
                                              const SuiteOptions& options) {
  std::vector<Outcomes> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      outcomes[i] = evaluate(corpus[i], options);
      evaluate_v_extendable(corpus[i], options, outcomes[i]);
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::vector<SuiteResult> results;
  for (int s = 0; s < kSuiteCount; ++s) {
    SuiteResult r;
    r.suite = kAllSuites[s];
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Outcome& o = outcomes[i][s];
      if (!o.applicable) continue;
      ++r.checked;
      if (o.exhausted) ++r.exhausted;
      if (o.failed) {
        if (r.failures++ == 0) {
          r.counterexample = encode_graph6(corpus[i].graph);
          r.counterexample_id = corpus[i].id;
          r.detail = o.detail;
        }
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ippkit

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

// Cross-module invariant suites run over a graph corpus. Each suite compares
// two independent routes (classifier vs. brute force, block structure vs.
// forbidden subgraphs, constructions vs. exact solver, ...) on every graph
// and reports the first graph where they disagree.

#ifndef IPPKIT_INVARIANTS_H_
#define IPPKIT_INVARIANTS_H_

#include <span>
#include <string>
#include <vector>

#include "ippkit/corpus.h"
#include "ippkit/ipp_solver.h"
#include "ippkit/matching.h"

namespace ippkit {

enum class Suite {
  kExtremalClassification,  // classify vs. brute-force ipp == |V| - nu
  kSandwich,                // ceil(n / (diam + 1)) <= ipp <= n - nu
  kOracleAgreement,         // ipp_exact == brute force
  kBlockParity,             // |V| and (#even blocks) + 1 have equal parity
  kBlockGraphRecognition,   // block graph <=> diamond-free chordal
  kOddExtremalStructure,    // odd extremal => all blocks odd complete
  kEvenExtremalStructure,   // even extremal => exactly one bad block, even
  kBlockGraphExtremality,   // block graph: extremal <=> <= 1 even block
  kExtremalConstruction,    // matching construction is a minimum IPP
  kUnsaturatedNotMixed,     // extremal: <= 1 unsaturated, none mixed
  kPerfectMatchingAvoiding, // odd extremal: G - u has a perfect matching
  kVExtendable,             // biconnected + conditions => v-extendable IPP
  kBlockSizes,              // sum over blocks of (|B| - 1) == |V| - 1
  kCertificates,            // every certificate re-checks
  kExpectedValues,          // corpus annotations match ipp
};

inline constexpr Suite kAllSuites[] = {
    Suite::kExtremalClassification, Suite::kSandwich,
    Suite::kOracleAgreement,        Suite::kBlockParity,
    Suite::kBlockGraphRecognition,  Suite::kOddExtremalStructure,
    Suite::kEvenExtremalStructure,  Suite::kBlockGraphExtremality,
    Suite::kExtremalConstruction,   Suite::kUnsaturatedNotMixed,
    Suite::kPerfectMatchingAvoiding, Suite::kVExtendable,
    Suite::kBlockSizes,             Suite::kCertificates,
    Suite::kExpectedValues,
};

const char* to_string(Suite s);

struct SuiteResult {
  Suite suite;
  // Graphs the suite's hypothesis applied to.
  int checked = 0;
  int failures = 0;
  // Solver budget ran out; these graphs count neither as pass nor failure.
  int exhausted = 0;
  // graph6 of the first failing graph in corpus order, and why.
  std::string counterexample;
  std::string counterexample_id;
  std::string detail;

  bool passed() const { return failures == 0 && exhausted == 0; }
};

struct SuiteOptions {
  SolverConfig solver;
  int jobs = 1;
  // Random vertex orders per graph used to sample maximum matchings, on top
  // of one order per starting vertex.
  int extra_matching_orders = 4;
  // All maximum matchings are enumerated up to this many vertices.
  int enumerate_matchings_up_to = 6;
};

// Runs every suite over the corpus. Disconnected graphs only take part in
// the expected-value suite. Results follow kAllSuites order.
std::vector<SuiteResult> run_invariant_suites(std::span<const CorpusEntry> corpus,
                                              const SuiteOptions& options = {});

// Every maximum matching of g, by exhaustive search.
std::vector<Matching> all_maximum_matchings(const Graph& g);

}  // namespace ippkit

#endif  // IPPKIT_INVARIANTS_H_

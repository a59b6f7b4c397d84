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

// Deciding whether ipp(G) = |V(G)| - nu(G) from the block structure.
//
// A connected graph meets the bound with equality exactly when every block
// is an odd complete graph, or when all blocks but one are, and the
// remaining block B is even and itself satisfies ipp(B) = |V(B)| - nu(B).
// Only that one even block ever needs an exact solve; even complete graphs,
// C4 and the diamond are recognised directly.

#ifndef IPPKIT_EXTREMAL_H_
#define IPPKIT_EXTREMAL_H_

#include <optional>
#include <string>
#include <vector>

#include "ippkit/graph.h"
#include "ippkit/ipp_solver.h"
#include "ippkit/matching.h"
#include "ippkit/partition.h"

namespace ippkit {

enum class Verdict { kExtremal, kNotExtremal, kUndecided };

enum class CertificateCase {
  kAllOddComplete,
  // Exactly one block is not odd complete, and it is even.
  kOneEvenBlock,
  kViolation,
};

enum class Violation {
  kNone,
  // Two or more blocks are not odd complete.
  kSeveralBadBlocks,
  // The only block that is not odd complete is odd.
  kOddNonCompleteBlock,
  // The exceptional even block B has an IPP with fewer than
  // |V(B)| - nu(B) paths.
  kEvenBlockBelowBound,
};

enum class BlockEvidence { kEvenComplete, kCycle4, kDiamond, kExactSolve };

const char* to_string(Verdict v);
const char* to_string(CertificateCase c);
const char* to_string(Violation v);
const char* to_string(BlockEvidence e);

struct BlockSummary {
  VertexSet vertices;
  bool complete = false;

  bool odd() const { return vertices.size() % 2 == 1; }
  bool odd_complete() const { return odd() && complete; }
};

// Why the exceptional even block B does (or does not) meet its own bound.
// For kExactSolve, block_ipp is an IPP of G[B] found by the exact solver and
// block_matching a maximum matching of G[B]; both use G's vertex ids.
struct BlockCertificate {
  BlockEvidence evidence = BlockEvidence::kExactSolve;
  IsometricPathPartition block_ipp;
  Matching block_matching;
  // block_ipp is known to be minimum.
  bool proven = true;
};

struct ExtremalityCertificate {
  Verdict verdict = Verdict::kUndecided;
  CertificateCase kind = CertificateCase::kViolation;
  Violation violation = Violation::kNone;
  std::vector<BlockSummary> blocks;
  // Indices into blocks of those that are not odd complete.
  std::vector<int> offending_blocks;
  std::optional<VertexSet> exceptional_block;
  std::optional<BlockCertificate> block_certificate;
  // An IPP of G with fewer than |V| - nu paths; filled on request.
  std::optional<IsometricPathPartition> witness_ipp;
  // Bounds on ipp of the exceptional block when the verdict is undecided.
  int block_lower_bound = 0;
  int block_upper_bound = 0;
};

// Classifies a connected graph. Never solves G itself; at most one block is
// solved exactly, and a budget overrun there yields kUndecided. Throws
// DisconnectedGraphError.
ExtremalityCertificate classify(const Graph& g, const SolverConfig& cfg = {});

// Re-checks every piece of evidence in cert against g using the block,
// matching and solver primitives. Returns an empty string when consistent,
// otherwise a description of the first problem.
std::string check_certificate(const Graph& g,
                              const ExtremalityCertificate& cert,
                              const SolverConfig& cfg = {});

// Solves G exactly and returns an IPP with fewer than |V| - nu paths if one
// exists. Throws BudgetExhaustedError.
std::optional<IsometricPathPartition> find_extremality_witness(
    const Graph& g, const SolverConfig& cfg = {});

struct ComponentCertificate {
  VertexSet component;
  // The component as its own graph; labels are those of the input.
  Graph graph;
  ExtremalityCertificate certificate;
};

struct ComponentClassification {
  std::vector<ComponentCertificate> components;
  // Extremal iff every component is; not extremal if any component is not;
  // undecided otherwise.
  Verdict verdict = Verdict::kUndecided;
};

ComponentClassification classify_components(const Graph& g,
                                            const SolverConfig& cfg = {});

// A minimum IPP of an extremal connected graph: a perfect matching when
// |V| is even, otherwise a perfect matching of G minus its lowest vertex
// plus that vertex. Throws PreconditionError when cert is not an extremal
// verdict or the matching the construction relies on does not exist.
IsometricPathPartition construct_minimum_ipp_extremal(
    const Graph& g, const ExtremalityCertificate& cert);

// The unique cut vertex of the leaf block whose vertex set is `clique`.
// Throws PreconditionError if clique is not a leaf clique of g.
int leaf_clique_cut_vertex(const Graph& g, VertexSet clique);

// G minus two non-cut vertices x, y of a leaf clique. The result has
// ipp one lower and nu one lower than g. Throws PreconditionError.
Graph reduce_leaf_clique_pair(const Graph& g, VertexSet clique, int x, int y);

// G minus every vertex of an odd leaf clique except its cut vertex.
// Extremality is unchanged. Throws PreconditionError.
Graph peel_odd_leaf_clique(const Graph& g, VertexSet clique);

}  // namespace ippkit

#endif  // IPPKIT_EXTREMAL_H_

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

#include "ippkit/extremal.h"

#include <algorithm>

#include "ippkit/blocks.h"

namespace ippkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kExtremal:
      return "EXTREMAL";
    case Verdict::kNotExtremal:
      return "NOT_EXTREMAL";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "UNKNOWN";
}

const char* to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::kAllOddComplete:
      return "ALL_ODD_COMPLETE";
    case CertificateCase::kOneEvenBlock:
      return "ONE_EVEN_BLOCK";
    case CertificateCase::kViolation:
      return "VIOLATION";
  }
  return "UNKNOWN";
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone:
      return "NONE";
    case Violation::kSeveralBadBlocks:
      return "SEVERAL_NON_ODD_COMPLETE_BLOCKS";
    case Violation::kOddNonCompleteBlock:
      return "ODD_NON_COMPLETE_BLOCK";
    case Violation::kEvenBlockBelowBound:
      return "EVEN_BLOCK_BELOW_BOUND";
  }
  return "UNKNOWN";
}

const char* to_string(BlockEvidence e) {
  switch (e) {
    case BlockEvidence::kEvenComplete:
      return "EVEN_COMPLETE";
    case BlockEvidence::kCycle4:
      return "C4";
    case BlockEvidence::kDiamond:
      return "DIAMOND";
    case BlockEvidence::kExactSolve:
      return "EXACT_SOLVE";
  }
  return "UNKNOWN";
}

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError();
}

std::optional<BlockEvidence> structural_evidence(const Graph& block) {
  if (block.is_complete()) return BlockEvidence::kEvenComplete;
  if (block.order() != 4) return std::nullopt;
  if (block.edge_count() == 5) return BlockEvidence::kDiamond;
  bool two_regular = true;
  for (int v = 0; v < 4; ++v) two_regular = two_regular && block.degree(v) == 2;
  if (block.edge_count() == 4 && two_regular) return BlockEvidence::kCycle4;
  return std::nullopt;
}

// Maps paths / matchings of G[s] back to G's ids.
IsometricPathPartition lift(const IsometricPathPartition& ipp, VertexSet s) {
  const std::vector<int> ids = s.to_vector();
  IsometricPathPartition out = ipp;
  for (Path& p : out.paths) {
    for (int& v : p.vertices) v = ids[v];
  }
  out.normalize();
  return out;
}

Matching lift(const Matching& m, VertexSet s) {
  const std::vector<int> ids = s.to_vector();
  std::vector<Edge> edges;
  for (const auto& [a, b] : m.edges()) edges.emplace_back(ids[a], ids[b]);
  return Matching(std::move(edges));
}

// Inverse of lift; throws PreconditionError if a vertex leaves s.
IsometricPathPartition restrict_to(const IsometricPathPartition& ipp,
                                   VertexSet s) {
  std::vector<int> local(Graph::kMaxVertices, -1);
  const std::vector<int> ids = s.to_vector();
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;
  IsometricPathPartition out = ipp;
  for (Path& p : out.paths) {
    for (int& v : p.vertices) {
      if (v < 0 || v >= Graph::kMaxVertices || local[v] < 0) {
        throw PreconditionError("block evidence leaves the block");
      }
      v = local[v];
    }
  }
  return out;
}

void settle_even_block(const Graph& g, VertexSet block,
                       const SolverConfig& cfg, ExtremalityCertificate& cert) {
  const Graph b = g.induced_subgraph(block);
  cert.exceptional_block = block;
  cert.kind = CertificateCase::kOneEvenBlock;
  BlockCertificate sub;
  if (auto evidence = structural_evidence(b)) {
    sub.evidence = *evidence;
    cert.block_certificate = sub;
    cert.verdict = Verdict::kExtremal;
    return;
  }
  const Matching matching = maximum_matching(b);
  const int bound = b.order() - matching.size();
  sub.evidence = BlockEvidence::kExactSolve;
  sub.block_matching = lift(matching, block);
  try {
    SolveResult solved = ipp_exact(b, cfg);
    sub.block_ipp = lift(solved.partition, block);
    sub.proven = solved.proven;
    if (solved.partition.size() < bound) {
      cert.verdict = Verdict::kNotExtremal;
      cert.kind = CertificateCase::kViolation;
      cert.violation = Violation::kEvenBlockBelowBound;
    } else if (solved.proven) {
      cert.verdict = Verdict::kExtremal;
    } else {
      cert.verdict = Verdict::kUndecided;
      cert.block_lower_bound = solved.lower_bound;
      cert.block_upper_bound = solved.partition.size();
    }
  } catch (const BudgetExhaustedError& e) {
    sub.block_ipp = lift(e.incumbent(), block);
    sub.proven = false;
    if (e.upper_bound() < bound) {
      cert.verdict = Verdict::kNotExtremal;
      cert.kind = CertificateCase::kViolation;
      cert.violation = Violation::kEvenBlockBelowBound;
    } else {
      cert.verdict = Verdict::kUndecided;
      cert.block_lower_bound = e.lower_bound();
      cert.block_upper_bound = e.upper_bound();
    }
  }
  cert.block_certificate = std::move(sub);
}

}  // namespace

ExtremalityCertificate classify(const Graph& g, const SolverConfig& cfg) {
  require_connected(g);
  ExtremalityCertificate cert;
  const BlockDecomposition d = block_decomposition(g);
  for (int i = 0; i < d.block_count(); ++i) {
    BlockSummary summary{d.blocks[i], g.is_clique(d.blocks[i])};
    if (!summary.odd_complete()) cert.offending_blocks.push_back(i);
    cert.blocks.push_back(summary);
  }

  if (cert.offending_blocks.empty()) {
    cert.verdict = Verdict::kExtremal;
    cert.kind = CertificateCase::kAllOddComplete;
    return cert;
  }
  if (cert.offending_blocks.size() >= 2) {
    cert.verdict = Verdict::kNotExtremal;
    cert.kind = CertificateCase::kViolation;
    cert.violation = Violation::kSeveralBadBlocks;
    return cert;
  }
  const BlockSummary& exceptional = cert.blocks[cert.offending_blocks.front()];
  if (exceptional.odd()) {
    cert.verdict = Verdict::kNotExtremal;
    cert.kind = CertificateCase::kViolation;
    cert.violation = Violation::kOddNonCompleteBlock;
    cert.exceptional_block = exceptional.vertices;
    return cert;
  }
  settle_even_block(g, exceptional.vertices, cfg, cert);
  return cert;
}

std::string check_certificate(const Graph& g,
                              const ExtremalityCertificate& cert,
                              const SolverConfig& cfg) {
  const BlockDecomposition d = block_decomposition(g);
  if (static_cast<int>(cert.blocks.size()) != d.block_count()) {
    return "block list does not match the block decomposition";
  }
  std::vector<int> offending;
  for (int i = 0; i < d.block_count(); ++i) {
    if (cert.blocks[i].vertices != d.blocks[i]) return "block list differs";
    if (cert.blocks[i].complete != g.is_clique(d.blocks[i])) {
      return "block completeness misreported";
    }
    if (!cert.blocks[i].odd_complete()) offending.push_back(i);
  }
  if (offending != cert.offending_blocks) return "offending blocks differ";

  const int n = g.order();
  const int nu = maximum_matching(g).size();
  if (cert.witness_ipp) {
    const DistanceMatrix dist = all_pairs_distances(g);
    IppVerdict v = verify_ipp(g, dist, *cert.witness_ipp);
    if (!v) return std::string("witness is not an IPP: ") + to_string(v.defect);
    if (cert.witness_ipp->size() >= n - nu) return "witness meets the bound";
    if (cert.verdict != Verdict::kNotExtremal) {
      return "witness contradicts verdict";
    }
  }

  switch (cert.kind) {
    case CertificateCase::kAllOddComplete:
      if (!offending.empty()) return "a block is not odd complete";
      return cert.verdict == Verdict::kExtremal ? "" : "verdict mismatch";
    case CertificateCase::kViolation:
      if (cert.verdict != Verdict::kNotExtremal) return "verdict mismatch";
      switch (cert.violation) {
        case Violation::kSeveralBadBlocks:
          return offending.size() >= 2 ? "" : "fewer than two bad blocks";
        case Violation::kOddNonCompleteBlock:
          return offending.size() == 1 && cert.blocks[offending[0]].odd()
                     ? ""
                     : "exceptional block is not odd";
        case Violation::kEvenBlockBelowBound:
          break;
        case Violation::kNone:
          return "violation without a reason";
      }
      break;
    case CertificateCase::kOneEvenBlock:
      break;
  }

  // One even exceptional block with evidence about its own bound.
  if (offending.size() != 1 || cert.blocks[offending[0]].odd()) {
    return "no single even exceptional block";
  }
  if (!cert.exceptional_block ||
      *cert.exceptional_block != cert.blocks[offending[0]].vertices) {
    return "exceptional block misreported";
  }
  if (!cert.block_certificate) return "missing block certificate";
  const VertexSet block = *cert.exceptional_block;
  const Graph b = g.induced_subgraph(block);
  const BlockCertificate& sub = *cert.block_certificate;
  if (sub.evidence != BlockEvidence::kExactSolve) {
    if (structural_evidence(b) != sub.evidence) {
      return "structural block evidence does not match the block";
    }
    return cert.verdict == Verdict::kExtremal ? "" : "verdict mismatch";
  }

  if (!is_matching_of(g, sub.block_matching) ||
      !sub.block_matching.saturated().is_subset_of(block) ||
      sub.block_matching.size() != maximum_matching(b).size()) {
    return "block matching is not a maximum matching of the block";
  }
  const int bound = b.order() - sub.block_matching.size();
  IsometricPathPartition local;
  try {
    local = restrict_to(sub.block_ipp, block);
  } catch (const PreconditionError& e) {
    return e.what();
  }
  IppVerdict v = verify_ipp(b, all_pairs_distances(b), local);
  if (!v) {
    return std::string("block IPP is not an IPP: ") + to_string(v.defect);
  }
  if (cert.verdict == Verdict::kNotExtremal) {
    return local.size() < bound ? "" : "block IPP does not beat the bound";
  }
  if (cert.verdict == Verdict::kUndecided) return "";
  if (local.size() != bound) return "block IPP size differs from the bound";
  // Minimality of the transcript: re-solve the block.
  try {
    if (ipp_exact(b, cfg).partition.size() != bound) {
      return "block re-solve disagrees";
    }
  } catch (const BudgetExhaustedError&) {
    return "block re-solve ran out of budget";
  }
  return "";
}

std::optional<IsometricPathPartition> find_extremality_witness(
    const Graph& g, const SolverConfig& cfg) {
  SolveResult solved = ipp_exact_by_components(g, cfg);
  const int bound = g.order() - maximum_matching(g).size();
  if (solved.partition.size() < bound) return solved.partition;
  return std::nullopt;
}

ComponentClassification classify_components(const Graph& g,
                                            const SolverConfig& cfg) {
  ComponentClassification out;
  bool all_extremal = true;
  bool any_not = false;
  for (VertexSet component : g.components()) {
    Graph sub = g.induced_subgraph(component);
    ExtremalityCertificate cert = classify(sub, cfg);
    all_extremal = all_extremal && cert.verdict == Verdict::kExtremal;
    any_not = any_not || cert.verdict == Verdict::kNotExtremal;
    out.components.push_back({component, std::move(sub), std::move(cert)});
  }
  out.verdict = all_extremal ? Verdict::kExtremal
                : any_not    ? Verdict::kNotExtremal
                             : Verdict::kUndecided;
  return out;
}

IsometricPathPartition construct_minimum_ipp_extremal(
    const Graph& g, const ExtremalityCertificate& cert) {
  if (cert.verdict != Verdict::kExtremal) {
    throw PreconditionError("certificate does not declare the graph extremal");
  }
  require_connected(g);
  Matching m;
  if (g.order() % 2 == 0) {
    m = maximum_matching(g);
    if (2 * m.size() != g.order()) {
      throw PreconditionError("even graph has no perfect matching");
    }
  } else {
    std::optional<Matching> avoiding = perfect_matching_avoiding(g, 0);
    if (!avoiding) {
      throw PreconditionError("no perfect matching avoids vertex 0");
    }
    m = *avoiding;
  }
  return matching_ipp(g, m);
}

int leaf_clique_cut_vertex(const Graph& g, VertexSet clique) {
  if (clique.empty() || !clique.is_subset_of(g.vertices()) ||
      !g.is_clique(clique)) {
    throw PreconditionError("vertex set is not a clique");
  }
  const BlockDecomposition d = block_decomposition(g);
  for (int i = 0; i < d.block_count(); ++i) {
    if (d.blocks[i] != clique) continue;
    if (d.block_cut_tree[i].size() != 1) break;
    return d.block_cut_tree[i].first();
  }
  throw PreconditionError("clique is not a leaf block");
}

Graph reduce_leaf_clique_pair(const Graph& g, VertexSet clique, int x,
                              int y) {
  const int cut = leaf_clique_cut_vertex(g, clique);
  if (x == y) throw PreconditionError("x and y must differ");
  if (!clique.contains(x) || !clique.contains(y)) {
    throw PreconditionError("x and y must lie in the clique");
  }
  if (x == cut || y == cut) {
    throw PreconditionError("x and y must not be the cut vertex");
  }
  VertexSet removed = VertexSet::Single(x) | VertexSet::Single(y);
  return g.without(removed);
}

Graph peel_odd_leaf_clique(const Graph& g, VertexSet clique) {
  const int cut = leaf_clique_cut_vertex(g, clique);
  if (clique.size() % 2 == 0) throw PreconditionError("leaf clique is even");
  return g.without(clique - VertexSet::Single(cut));
}

}  // namespace ippkit

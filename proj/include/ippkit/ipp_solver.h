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

// Minimum isometric path partitions.
//
// ipp_exact is a branch-and-bound over the enumerated isometric paths: the
// incumbent starts at the matching partition (|V| - nu paths), the lowest
// uncovered vertex is covered by every candidate path through it, and a node
// is cut once its path count plus ceil(uncovered / (diam + 1)) reaches the
// incumbent. ipp_bruteforce_oracle shares none of that code.

#ifndef IPPKIT_IPP_SOLVER_H_
#define IPPKIT_IPP_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ippkit/graph.h"
#include "ippkit/partition.h"

namespace ippkit {

struct SolverConfig {
  std::int64_t max_paths_per_pair = 10'000;
  std::int64_t node_budget = 10'000'000;
  std::chrono::milliseconds time_budget{60'000};

  // Throws PreconditionError unless every cap is positive.
  void validate() const;
};

struct PathEnumeration {
  // One orientation per path, smaller endpoint first; sorted by
  // (front, back, vertices). Includes all one-vertex paths.
  std::vector<Path> paths;
  // Some vertex pair had more than max_paths_per_pair shortest paths; the
  // extra ones were dropped.
  bool truncated = false;
};

// Throws DisconnectedGraphError.
PathEnumeration enumerate_isometric_paths(const Graph& g,
                                          const DistanceMatrix& d,
                                          const SolverConfig& cfg);

// ceil(|V| / (diam + 1)). Throws DisconnectedGraphError.
int ipp_lower_bound(const Graph& g, const DistanceMatrix& d);

struct SolveResult {
  IsometricPathPartition partition;
  int lower_bound = 0;
  // partition is a minimum IPP. False only when path enumeration was
  // truncated, in which case partition is an upper bound.
  bool proven = false;
  bool paths_truncated = false;
  std::int64_t nodes = 0;
};

// Raised when the node or time budget runs out before the search finishes.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(int lower_bound, IsometricPathPartition incumbent)
      : Error("solver budget exhausted with bounds [" +
              std::to_string(lower_bound) + ", " +
              std::to_string(incumbent.size()) + "]"),
        lower_bound_(lower_bound),
        incumbent_(std::move(incumbent)) {}

  int lower_bound() const { return lower_bound_; }
  int upper_bound() const { return incumbent_.size(); }
  const IsometricPathPartition& incumbent() const { return incumbent_; }

 private:
  int lower_bound_;
  IsometricPathPartition incumbent_;
};

// Minimum IPP of a connected graph. Throws DisconnectedGraphError and
// BudgetExhaustedError.
SolveResult ipp_exact(const Graph& g, const SolverConfig& cfg = {});

// Any graph: minimum IPPs of the components combined, in g's vertex ids.
SolveResult ipp_exact_by_components(const Graph& g,
                                    const SolverConfig& cfg = {});

inline constexpr int kOracleMaxOrder = 10;

// ipp(g) by dynamic programming over all vertex subsets, each subset
// qualifying iff some ordering of it is an isometric path. Distances come
// from Floyd-Warshall. Throws DisconnectedGraphError, and PreconditionError
// when n > 10.
int ipp_bruteforce_oracle(const Graph& g);

enum class IppDefect { kNone, kOverlap, kMissingVertex, kNotAPath, kNotIsometric };

const char* to_string(IppDefect defect);

struct IppVerdict {
  IppDefect defect = IppDefect::kNone;
  std::string detail;

  bool valid() const { return defect == IppDefect::kNone; }
  explicit operator bool() const { return valid(); }
};

// Checks, in order: every entry is a path of g, paths are vertex-disjoint,
// each is isometric, and together they cover V(g).
IppVerdict verify_ipp(const Graph& g, const DistanceMatrix& d,
                      const IsometricPathPartition& ipp);

// An IPP of size at most nu(g) in which v is an endpoint of its path, or
// nullopt if none exists. Throws DisconnectedGraphError, PreconditionError
// for a bad v, and BudgetExhaustedError when a budget runs out or path
// enumeration was truncated before one was found.
std::optional<IsometricPathPartition> find_v_extendable_ipp(
    const Graph& g, int v, const SolverConfig& cfg = {});

}  // namespace ippkit

#endif  // IPPKIT_IPP_SOLVER_H_

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

#include "ippkit/ipp_solver.h"

#include <algorithm>

#include "ippkit/matching.h"

namespace ippkit {

void SolverConfig::validate() const {
  if (max_paths_per_pair <= 0 || node_budget <= 0 ||
      time_budget.count() <= 0) {
    throw PreconditionError("solver budgets must be positive");
  }
}

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError();
}

// Depth-first walk of the shortest-path structure from `from` towards `to`.
class GeodesicWalker {
 public:
  GeodesicWalker(const Graph& g, const DistanceMatrix& d, int from, int to,
                 std::int64_t cap, std::vector<Path>& out)
      : g_(g), d_(d), to_(to), cap_(cap), out_(out) {
    current_.push_back(from);
  }

  // Returns false when the cap was hit.
  bool run() {
    extend();
    return emitted_ <= cap_;
  }

 private:
  void extend() {
    if (emitted_ > cap_) return;
    int tail = current_.back();
    if (tail == to_) {
      if (++emitted_ <= cap_) out_.push_back(Path{current_});
      return;
    }
    int remaining = d_(tail, to_);
    for (int w : g_.neighbors(tail).to_vector()) {
      if (d_(w, to_) != remaining - 1) continue;
      current_.push_back(w);
      extend();
      current_.pop_back();
    }
  }

  const Graph& g_;
  const DistanceMatrix& d_;
  int to_;
  std::int64_t cap_;
  std::vector<Path>& out_;
  std::vector<int> current_;
  std::int64_t emitted_ = 0;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

class BudgetClock {
 public:
  explicit BudgetClock(const SolverConfig& cfg)
      : node_budget_(cfg.node_budget),
        deadline_(std::chrono::steady_clock::now() + cfg.time_budget) {}

  // Counts a node; false once a budget is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > node_budget_) return false;
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      return false;
    }
    return true;
  }
  std::int64_t nodes() const { return nodes_; }

 private:
  std::int64_t node_budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::int64_t nodes_ = 0;
};

struct BudgetSpent {};

// Exact-cover search over candidate paths.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const DistanceMatrix& d,
              const PathEnumeration& paths, const SolverConfig& cfg)
      : paths_(paths.paths),
        per_vertex_(g.order()),
        max_path_order_(d.diameter() + 1),
        clock_(cfg) {
    masks_.reserve(paths_.size());
    for (const Path& p : paths_) masks_.push_back(p.vertex_set());
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
      for (int v : paths_[i].vertices) per_vertex_[v].push_back(i);
    }
    // Longest first; ties keep enumeration order.
    for (auto& list : per_vertex_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return paths_[a].vertices.size() > paths_[b].vertices.size();
      });
    }
  }

  // Searches for a cover with fewer than `bound` paths. `first_choices`, if
  // given, lists the allowed paths for one designated vertex, which is
  // covered first. With `stop_at_first` the search ends at the first cover
  // found.
  void search(int bound, VertexSet all, const std::vector<int>* first_choices,
              bool stop_at_first) {
    best_count_ = bound;
    stop_at_first_ = stop_at_first;
    if (first_choices == nullptr) {
      descend(all, 0);
      return;
    }
    if (!clock_.tick()) throw BudgetSpent{};
    for (int idx : *first_choices) {
      chosen_.push_back(idx);
      descend(all - masks_[idx], 1);
      chosen_.pop_back();
      if (done_) return;
    }
  }

  bool improved() const { return !best_.empty(); }
  int best_count() const { return best_count_; }
  const std::vector<int>& best() const { return best_; }
  std::int64_t nodes() const { return clock_.nodes(); }

  IsometricPathPartition partition_of(const std::vector<int>& choice) const {
    IsometricPathPartition ipp;
    for (int idx : choice) ipp.paths.push_back(paths_[idx]);
    ipp.normalize();
    return ipp;
  }

  const std::vector<int>& paths_through(int v) const { return per_vertex_[v]; }

 private:
  void descend(VertexSet uncovered, int count) {
    if (!clock_.tick()) throw BudgetSpent{};
    if (uncovered.empty()) {
      if (count < best_count_) {
        best_count_ = count;
        best_ = chosen_;
        if (stop_at_first_) done_ = true;
      }
      return;
    }
    if (count + ceil_div(uncovered.size(), max_path_order_) >= best_count_) {
      return;
    }
    int v = uncovered.first();
    for (int idx : per_vertex_[v]) {
      if (!masks_[idx].is_subset_of(uncovered)) continue;
      chosen_.push_back(idx);
      descend(uncovered - masks_[idx], count + 1);
      chosen_.pop_back();
      if (done_) return;
    }
  }

  const std::vector<Path>& paths_;
  std::vector<VertexSet> masks_;
  std::vector<std::vector<int>> per_vertex_;
  int max_path_order_;
  BudgetClock clock_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  int best_count_ = 0;
  bool stop_at_first_ = false;
  bool done_ = false;
};

}  // namespace

PathEnumeration enumerate_isometric_paths(const Graph& g,
                                          const DistanceMatrix& d,
                                          const SolverConfig& cfg) {
  require_connected(g);
  cfg.validate();
  PathEnumeration out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    out.paths.push_back(Path{{u}});
    for (int v = u + 1; v < n; ++v) {
      GeodesicWalker walker(g, d, u, v, cfg.max_paths_per_pair, out.paths);
      if (!walker.run()) out.truncated = true;
    }
  }
  return out;
}

int ipp_lower_bound(const Graph& g, const DistanceMatrix& d) {
  require_connected(g);
  return ceil_div(g.order(), d.diameter() + 1);
}

SolveResult ipp_exact(const Graph& g, const SolverConfig& cfg) {
  require_connected(g);
  cfg.validate();
  const DistanceMatrix d = all_pairs_distances(g);
  const PathEnumeration paths = enumerate_isometric_paths(g, d, cfg);

  SolveResult result;
  result.lower_bound = ipp_lower_bound(g, d);
  result.paths_truncated = paths.truncated;
  result.partition = matching_ipp(g, maximum_matching(g));

  CoverSearch search(g, d, paths, cfg);
  if (result.partition.size() > result.lower_bound) {
    try {
      search.search(result.partition.size(), g.vertices(), nullptr, false);
    } catch (const BudgetSpent&) {
      IsometricPathPartition incumbent =
          search.improved() ? search.partition_of(search.best())
                            : result.partition;
      throw BudgetExhaustedError(result.lower_bound, std::move(incumbent));
    }
    if (search.improved()) result.partition = search.partition_of(search.best());
  }
  result.nodes = search.nodes();
  result.proven = !paths.truncated ||
                  result.partition.size() == result.lower_bound;
  return result;
}

SolveResult ipp_exact_by_components(const Graph& g, const SolverConfig& cfg) {
  SolveResult total;
  total.proven = true;
  bool exhausted = false;
  for (VertexSet component : g.components()) {
    std::vector<int> ids = component.to_vector();
    const Graph sub = g.induced_subgraph(component);
    SolveResult part;
    try {
      part = ipp_exact(sub, cfg);
    } catch (const BudgetExhaustedError& e) {
      exhausted = true;
      part.partition = e.incumbent();
      part.lower_bound = e.lower_bound();
    }
    for (Path p : part.partition.paths) {
      for (int& v : p.vertices) v = ids[v];
      total.partition.paths.push_back(std::move(p));
    }
    total.lower_bound += part.lower_bound;
    total.proven = total.proven && part.proven;
    total.paths_truncated = total.paths_truncated || part.paths_truncated;
    total.nodes += part.nodes;
  }
  total.partition.normalize();
  if (exhausted) {
    throw BudgetExhaustedError(total.lower_bound, std::move(total.partition));
  }
  return total;
}

const char* to_string(IppDefect defect) {
  switch (defect) {
    case IppDefect::kNone:
      return "OK";
    case IppDefect::kOverlap:
      return "OVERLAP";
    case IppDefect::kMissingVertex:
      return "MISSING_VERTEX";
    case IppDefect::kNotAPath:
      return "NOT_A_PATH";
    case IppDefect::kNotIsometric:
      return "NOT_ISOMETRIC";
  }
  return "UNKNOWN";
}

IppVerdict verify_ipp(const Graph& g, const DistanceMatrix& d,
                      const IsometricPathPartition& ipp) {
  for (std::size_t i = 0; i < ipp.paths.size(); ++i) {
    if (!is_valid_path(g, ipp.paths[i])) {
      return {IppDefect::kNotAPath, "entry " + std::to_string(i)};
    }
  }
  VertexSet covered;
  for (std::size_t i = 0; i < ipp.paths.size(); ++i) {
    VertexSet s = ipp.paths[i].vertex_set();
    if (s.intersects(covered)) {
      return {IppDefect::kOverlap,
              "vertex " + std::to_string((s & covered).first())};
    }
    covered |= s;
  }
  for (std::size_t i = 0; i < ipp.paths.size(); ++i) {
    if (!is_isometric_path(g, d, ipp.paths[i])) {
      return {IppDefect::kNotIsometric, "entry " + std::to_string(i)};
    }
  }
  VertexSet missing = g.vertices() - covered;
  if (!missing.empty()) {
    return {IppDefect::kMissingVertex,
            "vertex " + std::to_string(missing.first())};
  }
  return {};
}

std::optional<IsometricPathPartition> find_v_extendable_ipp(
    const Graph& g, int v, const SolverConfig& cfg) {
  require_connected(g);
  cfg.validate();
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
  }
  const int nu = maximum_matching(g).size();
  const DistanceMatrix d = all_pairs_distances(g);
  if (nu == 0 || ipp_lower_bound(g, d) > nu) return std::nullopt;
  const PathEnumeration paths = enumerate_isometric_paths(g, d, cfg);

  CoverSearch search(g, d, paths, cfg);
  std::vector<int> ends_at_v;
  for (int idx : search.paths_through(v)) {
    if (paths.paths[idx].has_endpoint(v)) ends_at_v.push_back(idx);
  }
  try {
    search.search(nu + 1, g.vertices(), &ends_at_v, true);
  } catch (const BudgetSpent&) {
    throw BudgetExhaustedError(ipp_lower_bound(g, d),
                               matching_ipp(g, maximum_matching(g)));
  }
  if (search.improved()) return search.partition_of(search.best());
  if (paths.truncated) {
    throw BudgetExhaustedError(ipp_lower_bound(g, d),
                               matching_ipp(g, maximum_matching(g)));
  }
  return std::nullopt;
}

}  // namespace ippkit

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

// Exhaustive ipp for small graphs. Uses only the adjacency relation of the
// input: its own distance table, its own path test, and a subset DP in
// place of the branch-and-bound.

#include <algorithm>
#include <array>
#include <vector>

#include "ippkit/ipp_solver.h"

namespace ippkit {

namespace {

constexpr int kFar = 1000;

using Table = std::array<std::array<int, kOracleMaxOrder>, kOracleMaxOrder>;

Table floyd_warshall(const Graph& g) {
  const int n = g.order();
  Table dist{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      dist[i][j] = i == j ? 0 : (g.adjacent(i, j) ? 1 : kFar);
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

// Whether the members of `subset` can be listed so that consecutive ones are
// adjacent and the two ends are at distance |subset| - 1.
bool orders_into_geodesic(const Graph& g, const Table& dist,
                          std::uint32_t subset) {
  const int n = g.order();
  const int k = std::popcount(subset);
  if (k == 1) return true;
  std::vector<int> members;
  for (int v = 0; v < n; ++v) {
    if ((subset >> v) & 1) members.push_back(v);
  }
  // Hamiltonian paths of the subgraph induced by `subset`, by extension.
  std::vector<int> walk;
  std::uint32_t used = 0;
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(walk.size()) == k) {
      return dist[walk.front()][walk.back()] == k - 1;
    }
    for (int w : members) {
      if ((used >> w) & 1) continue;
      if (!walk.empty() && !g.adjacent(walk.back(), w)) continue;
      walk.push_back(w);
      used |= 1u << w;
      bool found = self(self);
      walk.pop_back();
      used &= ~(1u << w);
      if (found) return true;
    }
    return false;
  };
  return extend(extend);
}

}  // namespace

int ipp_bruteforce_oracle(const Graph& g) {
  const int n = g.order();
  if (n > kOracleMaxOrder) {
    throw PreconditionError("brute-force oracle limited to 10 vertices");
  }
  if (!g.is_connected()) throw DisconnectedGraphError();
  const Table dist = floyd_warshall(g);
  const std::uint32_t full = (1u << n) - 1;

  std::vector<bool> qualifies(full + 1, false);
  for (std::uint32_t s = 1; s <= full; ++s) {
    qualifies[s] = orders_into_geodesic(g, dist, s);
  }
  // best[s] = fewest isometric paths partitioning s.
  std::vector<int> best(full + 1, kFar);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t part = s; part != 0; part = (part - 1) & s) {
      if ((part & low) && qualifies[part]) {
        best[s] = std::min(best[s], best[s ^ part] + 1);
      }
    }
  }
  return best[full];
}

}  // namespace ippkit

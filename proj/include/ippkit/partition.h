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

#ifndef IPPKIT_PARTITION_H_
#define IPPKIT_PARTITION_H_

#include <vector>

#include "ippkit/graph.h"

namespace ippkit {

// A collection of paths meant to partition V(G) into isometric paths.
// Whether it does is decided by verify_ipp.
struct IsometricPathPartition {
  std::vector<Path> paths;

  int size() const { return static_cast<int>(paths.size()); }
  // Sorts paths by first vertex, orienting each so that the smaller
  // endpoint comes first.
  void normalize();

  bool operator==(const IsometricPathPartition&) const = default;
};

}  // namespace ippkit

#endif  // IPPKIT_PARTITION_H_

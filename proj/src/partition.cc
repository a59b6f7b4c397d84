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

#include "ippkit/partition.h"

#include <algorithm>

namespace ippkit {

void IsometricPathPartition::normalize() {
  for (Path& p : paths) {
    if (p.front() > p.back()) {
      std::reverse(p.vertices.begin(), p.vertices.end());
    }
  }
  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return a.vertices < b.vertices;
  });
}

}  // namespace ippkit

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

// Writes one graph6 file per order with every connected graph on that many
// vertices, up to isomorphism:  gen_corpus OUT_DIR MAX_N

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ippkit/corpus.h"
#include "ippkit/graph6.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_corpus OUT_DIR MAX_N\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  const int max_n = std::atoi(argv[2]);
  std::filesystem::create_directories(dir);
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = ippkit::connected_graphs(n);
    std::ofstream out(dir / ("connected_n" + std::to_string(n) + ".g6"));
    for (const auto& g : graphs) out << ippkit::encode_graph6(g) << '\n';
    std::cout << "n=" << n << ": " << graphs.size() << " connected graphs\n";
  }
  return 0;
}

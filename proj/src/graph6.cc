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

#include "ippkit/graph6.h"

#include <vector>

namespace ippkit {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

}  // namespace

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    int b = static_cast<unsigned char>(c);
    if (b < kBias || b > kMaxByte) {
      throw ParseError("graph6 byte " + std::to_string(b) +
                       " outside 63..126");
    }
  }
  const int first = static_cast<unsigned char>(text[0]);
  if (first == kMaxByte) {
    throw ParseError("long-form graph6 (more than 62 vertices) unsupported");
  }
  const int n = first - kBias;
  if (n == 0) throw ParseError("graph6 encodes the null graph");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body_bytes = (bit_count + 5) / 6;
  std::string_view body = text.substr(1);
  if (body.size() < body_bytes) {
    throw ParseError("graph6 string too short for " + std::to_string(n) +
                     " vertices");
  }
  if (body.size() > body_bytes) {
    throw ParseError("trailing bytes after graph6 body");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(body[k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = static_cast<unsigned char>(body[k / 6]) - kBias;
    if (byte & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError("nonzero padding bits in graph6 body");
    }
  }
  return from_edge_list(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InvalidGraphError("graph6 short form supports at most 62 vertices");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace ippkit

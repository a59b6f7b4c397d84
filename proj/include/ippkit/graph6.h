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

// graph6 encoding, short form only (n <= 62).
//
// A graph6 string is N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// six bits per byte, most significant bit first, each byte offset by 63.

#ifndef IPPKIT_GRAPH6_H_
#define IPPKIT_GRAPH6_H_

#include <string>
#include <string_view>

#include "ippkit/graph.h"

namespace ippkit {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// Decodes one graph6 line. The optional ">>graph6<<" header and a trailing
// newline / carriage return are tolerated. Throws ParseError on an empty
// string, an unsupported or malformed length prefix, a byte outside 63..126,
// a wrong body length, or nonzero padding bits.
Graph decode_graph6(std::string_view text);

// Throws InvalidGraphError when g has more than 62 vertices.
std::string encode_graph6(const Graph& g);

}  // namespace ippkit

#endif  // IPPKIT_GRAPH6_H_

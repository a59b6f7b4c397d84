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

#ifndef IPPKIT_ERRORS_H_
#define IPPKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ippkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad vertex count, endpoint out of range, self-loop.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// A vertex sequence that is not a path of the graph.
class InvalidPathError : public Error {
 public:
  using Error::Error;
};

// An operation that needs a connected graph received a disconnected one.
class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError() : Error("graph is not connected") {}
};

// Malformed text input. line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Argument violates an operation's precondition (invalid matching, not a
// leaf clique, uncertified graph, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ippkit

#endif  // IPPKIT_ERRORS_H_

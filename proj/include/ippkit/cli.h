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

// Batch front end behind the `ippkit` binary:
//
//   ippkit exact|classify|survey|verify [--format graph6|edgelist]
//          [--jobs N] [--node-budget N] [--time-budget SECS] [--max-paths N]
//          [--table] [--witness] [--timing] FILES...
//
// One JSON object per input graph (or per suite for `verify`) on stdout, in
// input order. `-` reads standard input.

#ifndef IPPKIT_CLI_H_
#define IPPKIT_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ippkit/graph.h"
#include "ippkit/ipp_solver.h"
#include "json.hpp"

namespace ippkit::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kBudgetExhausted = 3,
  kInvariantFailure = 4,
};

enum class InputFormat { kAuto, kGraph6, kEdgeList };

struct Options {
  InputFormat format = InputFormat::kAuto;
  int jobs = 1;
  SolverConfig solver;
  bool table = false;
  bool witness = false;
  // Adds wall-clock fields, which makes output run-dependent.
  bool timing = false;
  std::vector<std::string> inputs;
};

struct InputGraph {
  std::string id;
  std::optional<Graph> graph;
  // Set when the input could not be parsed.
  std::string error;
};

// Reads every input; `-` is taken from `stdin_stream`. Unreadable files and
// unparsable lines become entries with an error.
std::vector<InputGraph> load_inputs(const Options& options,
                                    std::istream& stdin_stream);

enum class Status { kProven, kBoundsOnly, kError };

const char* to_string(Status s);

struct RunRecord {
  std::string input_id;
  Status status = Status::kError;
  nlohmann::ordered_json fields;
  bool budget_exhausted = false;
};

// Per-graph work for each subcommand.
RunRecord exact_record(const InputGraph& input, const Options& options);
RunRecord classify_record(const InputGraph& input, const Options& options);
// nullopt when the graph is filtered out or not extremal.
std::optional<RunRecord> survey_record(const InputGraph& input,
                                       const Options& options);

// Each returns the process exit code.
int cmd_exact(const Options& options, std::istream& in, std::ostream& out,
              std::ostream& err);
int cmd_classify(const Options& options, std::istream& in, std::ostream& out,
                 std::ostream& err);
int cmd_survey(const Options& options, std::istream& in, std::ostream& out,
               std::ostream& err);
// options.inputs name corpora: `connected:N` generates every connected graph
// on 1..N vertices (N <= 8), `bundled:N` reads the shipped corpus files for
// 1..N, anything else is a graph6 file (lines may carry an expected ipp as a
// second column).
int cmd_verify(const Options& options, std::istream& in, std::ostream& out,
               std::ostream& err);

// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ippkit::cli

#endif  // IPPKIT_CLI_H_

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

#include "ippkit/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ippkit/blocks.h"
#include "ippkit/corpus.h"
#include "ippkit/extremal.h"
#include "ippkit/graph6.h"
#include "ippkit/invariants.h"
#include "ippkit/matching.h"

#ifndef IPPKIT_DATA_DIR
#define IPPKIT_DATA_DIR "data"
#endif

namespace ippkit::cli {

namespace {

using json = nlohmann::ordered_json;

bool read_all(const std::string& path, std::istream& stdin_stream,
              std::string& text) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    text = buf.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  std::ostringstream buf;
  buf << file.rdbuf();
  text = buf.str();
  return true;
}

bool is_skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// An edge list opens with "n m"; a graph6 line never contains a space.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    std::string rest;
    return static_cast<bool>(fields >> a >> b) && !(fields >> rest);
  }
  return false;
}

void load_graph6_lines(const std::string& source, const std::string& text,
                       std::vector<InputGraph>& out) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    InputGraph entry;
    entry.id = source + ":" + std::to_string(line_no);
    std::istringstream fields(line);
    std::string code;
    fields >> code;
    try {
      entry.graph = decode_graph6(code);
    } catch (const Error& e) {
      entry.error = "line " + std::to_string(line_no) + ": " + e.what();
    }
    out.push_back(std::move(entry));
  }
}

json labelled(const Graph& g, VertexSet s) {
  json out = json::array();
  for (int v : s.to_vector()) out.push_back(g.label(v));
  return out;
}

json labelled(const Graph& g, const IsometricPathPartition& p) {
  json out = json::array();
  for (const Path& path : p.paths) {
    json vs = json::array();
    for (int v : path.vertices) vs.push_back(g.label(v));
    out.push_back(std::move(vs));
  }
  return out;
}

json labelled(const Graph& g, const Matching& m) {
  json out = json::array();
  for (const auto& [u, v] : m.edges()) {
    out.push_back(json::array({g.label(u), g.label(v)}));
  }
  return out;
}

// `g` is the graph the certificate was computed on; its labels map back to
// the input.
json certificate_json(const Graph& g, const ExtremalityCertificate& cert) {
  json out;
  out["verdict"] = to_string(cert.verdict);
  out["case"] = to_string(cert.kind);
  out["violation"] = to_string(cert.violation);
  json blocks = json::array();
  for (const BlockSummary& b : cert.blocks) {
    blocks.push_back({{"vertices", labelled(g, b.vertices)},
                      {"complete", b.complete},
                      {"odd", b.odd()}});
  }
  out["blocks"] = std::move(blocks);
  out["offending_blocks"] = cert.offending_blocks;
  out["exceptional_block"] =
      cert.exceptional_block ? labelled(g, *cert.exceptional_block) : json();
  if (cert.block_certificate) {
    const BlockCertificate& b = *cert.block_certificate;
    out["sub_certificate"] = {{"evidence", to_string(b.evidence)},
                              {"block_ipp", labelled(g, b.block_ipp)},
                              {"block_matching", labelled(g, b.block_matching)},
                              {"proven", b.proven}};
  } else {
    out["sub_certificate"] = nullptr;
  }
  out["witness_ipp"] =
      cert.witness_ipp ? labelled(g, *cert.witness_ipp) : json();
  if (cert.verdict == Verdict::kUndecided) {
    out["block_lower_bound"] = cert.block_lower_bound;
    out["block_upper_bound"] = cert.block_upper_bound;
  }
  return out;
}

RunRecord error_record(const InputGraph& input, const std::string& message) {
  RunRecord r;
  r.input_id = input.id;
  r.status = Status::kError;
  r.fields = {{"input_id", input.id},
              {"status", to_string(Status::kError)},
              {"error", message}};
  return r;
}

json base_fields(const InputGraph& input, const Graph& g, int nu) {
  return {{"input_id", input.id},
          {"n", g.order()},
          {"m", g.edge_count()},
          {"nu", nu}};
}

// Sum over components of ceil(n_C / (diam_C + 1)).
int component_lower_bound(const Graph& g) {
  int total = 0;
  for (VertexSet c : g.components()) {
    Graph sub = g.induced_subgraph(c);
    total += ipp_lower_bound(sub, all_pairs_distances(sub));
  }
  return total;
}

template <typename Result>
std::vector<Result> parallel_map(int count, int jobs,
                                 const std::function<Result(int)>& work) {
  std::vector<Result> results(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) results[i] = work(i);
  };
  const int threads = std::max(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

std::string cell(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void print_table(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<json>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(row.contains(columns[i]) ? cell(row[columns[i]]) : "-");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i + 1 == line.size()) {
        out << line[i] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[i])) << line[i]
            << "  ";
      }
    }
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

int exit_code_for(const std::vector<RunRecord>& records) {
  int code = kOk;
  for (const RunRecord& r : records) {
    if (r.status == Status::kError) code = std::max<int>(code, kParseError);
    if (r.status == Status::kBoundsOnly || r.budget_exhausted) {
      code = std::max<int>(code, kBudgetExhausted);
    }
  }
  return code;
}

using RecordFn = std::function<std::optional<RunRecord>(const InputGraph&)>;

int run_records(const Options& options, std::istream& in, std::ostream& out,
                std::ostream& err, const RecordFn& fn,
                const std::vector<std::string>& columns) {
  const std::vector<InputGraph> inputs = load_inputs(options, in);
  using Slot = std::optional<RunRecord>;
  std::vector<Slot> slots = parallel_map<Slot>(
      static_cast<int>(inputs.size()), options.jobs, [&](int i) -> Slot {
        const auto start = std::chrono::steady_clock::now();
        Slot r;
        if (!inputs[i].graph) {
          r = error_record(inputs[i], inputs[i].error);
        } else {
          try {
            r = fn(inputs[i]);
          } catch (const Error& e) {
            r = error_record(inputs[i], e.what());
          }
        }
        if (r && options.timing) {
          std::chrono::duration<double> secs =
              std::chrono::steady_clock::now() - start;
          r->fields["elapsed"] = secs.count();
        }
        return r;
      });
  std::vector<RunRecord> records;
  for (Slot& s : slots) {
    if (!s) continue;
    if (s->status == Status::kError) {
      err << s->input_id << ": " << s->fields["error"].get<std::string>() << "\n";
    }
    records.push_back(std::move(*s));
  }
  if (options.table) {
    std::vector<json> rows;
    for (const RunRecord& r : records) rows.push_back(r.fields);
    std::vector<std::string> cols = columns;
    if (options.timing) cols.push_back("elapsed");
    print_table(out, cols, rows);
  } else {
    for (const RunRecord& r : records) out << r.fields.dump() << "\n";
  }
  return exit_code_for(records);
}

std::string data_dir() {
  if (const char* env = std::getenv("IPPKIT_DATA")) return env;
  return IPPKIT_DATA_DIR;
}

// Throws Error with a user-facing message on a bad spec or missing file.
void append_corpus(const std::string& spec, std::istream& stdin_stream,
                   std::vector<CorpusEntry>& corpus) {
  auto parse_order = [&](const std::string& text) {
    int n = 0;
    std::istringstream in(text);
    if (!(in >> n) || !in.eof() || n < 1) {
      throw PreconditionError("bad corpus order in '" + spec + "'");
    }
    return n;
  };
  if (spec.rfind("connected:", 0) == 0) {
    const int max_n = parse_order(spec.substr(10));
    for (int n = 1; n <= max_n; ++n) {
      int index = 0;
      for (Graph& g : connected_graphs(n)) {
        corpus.push_back({std::move(g),
                          "connected_n" + std::to_string(n) + ":" +
                              std::to_string(++index),
                          std::nullopt});
      }
    }
    return;
  }
  if (spec.rfind("bundled:", 0) == 0) {
    const int max_n = parse_order(spec.substr(8));
    for (int n = 1; n <= max_n; ++n) {
      append_corpus(data_dir() + "/corpus/connected_n" + std::to_string(n) +
                        ".g6",
                    stdin_stream, corpus);
    }
    return;
  }
  std::string text;
  if (!read_all(spec, stdin_stream, text)) {
    throw PreconditionError("cannot open corpus '" + spec + "'");
  }
  std::istringstream in(text);
  std::vector<CorpusEntry> part = read_graph6_corpus(in, spec);
  for (auto& e : part) corpus.push_back(std::move(e));
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::kProven:
      return "PROVEN";
    case Status::kBoundsOnly:
      return "BOUNDS_ONLY";
    case Status::kError:
      return "ERROR";
  }
  return "UNKNOWN";
}

std::vector<InputGraph> load_inputs(const Options& options,
                                    std::istream& stdin_stream) {
  std::vector<InputGraph> out;
  for (const std::string& path : options.inputs) {
    std::string text;
    if (!read_all(path, stdin_stream, text)) {
      out.push_back({path, std::nullopt, "cannot open '" + path + "'"});
      continue;
    }
    bool edge_list = options.format == InputFormat::kEdgeList ||
                     (options.format == InputFormat::kAuto &&
                      looks_like_edge_list(text));
    if (!edge_list) {
      load_graph6_lines(path, text, out);
      continue;
    }
    InputGraph entry{path, std::nullopt, ""};
    try {
      entry.graph = parse_edge_list(text);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

RunRecord exact_record(const InputGraph& input, const Options& options) {
  const Graph& g = *input.graph;
  const int nu = maximum_matching(g).size();
  RunRecord r;
  r.input_id = input.id;
  r.fields = base_fields(input, g, nu);
  try {
    SolveResult s = ipp_exact_by_components(g, options.solver);
    r.status = s.proven ? Status::kProven : Status::kBoundsOnly;
    r.fields["ipp"] = s.proven ? json(s.partition.size()) : json();
    r.fields["lower_bound"] = s.lower_bound;
    r.fields["upper_bound"] = s.proven ? g.order() - nu : s.partition.size();
    r.fields["status"] = to_string(r.status);
    r.fields["paths_truncated"] = s.paths_truncated;
    r.fields["partition"] = labelled(g, s.partition);
  } catch (const BudgetExhaustedError& e) {
    r.status = Status::kBoundsOnly;
    r.budget_exhausted = true;
    r.fields["ipp"] = nullptr;
    r.fields["lower_bound"] = e.lower_bound();
    r.fields["upper_bound"] = e.upper_bound();
    r.fields["status"] = to_string(r.status);
    r.fields["budget_exhausted"] = true;
    r.fields["partition"] = labelled(g, e.incumbent());
  }
  return r;
}

RunRecord classify_record(const InputGraph& input, const Options& options) {
  const Graph& g = *input.graph;
  const int nu = maximum_matching(g).size();
  RunRecord r;
  r.input_id = input.id;
  r.fields = base_fields(input, g, nu);

  ComponentClassification cc = classify_components(g, options.solver);
  bool witness_exhausted = false;
  if (options.witness) {
    for (ComponentCertificate& c : cc.components) {
      if (c.certificate.verdict != Verdict::kNotExtremal ||
          c.certificate.witness_ipp) {
        continue;
      }
      try {
        c.certificate.witness_ipp =
            find_extremality_witness(c.graph, options.solver);
      } catch (const BudgetExhaustedError&) {
        witness_exhausted = true;
      }
    }
  }

  json cert;
  if (cc.components.size() == 1) {
    cert = certificate_json(cc.components[0].graph,
                            cc.components[0].certificate);
  } else {
    cert["verdict"] = to_string(cc.verdict);
    json parts = json::array();
    for (const ComponentCertificate& c : cc.components) {
      parts.push_back({{"vertices", labelled(g, c.component)},
                       {"certificate", certificate_json(c.graph, c.certificate)}});
    }
    cert["components"] = std::move(parts);
  }

  r.status = cc.verdict == Verdict::kUndecided ? Status::kBoundsOnly
                                               : Status::kProven;
  r.budget_exhausted = cc.verdict == Verdict::kUndecided || witness_exhausted;
  r.fields["verdict"] = to_string(cc.verdict);
  r.fields["case"] = cc.components.size() == 1
                         ? json(to_string(cc.components[0].certificate.kind))
                         : json();
  r.fields["ipp"] =
      cc.verdict == Verdict::kExtremal ? json(g.order() - nu) : json();
  r.fields["lower_bound"] = component_lower_bound(g);
  r.fields["upper_bound"] = g.order() - nu;
  r.fields["status"] = to_string(r.status);
  if (witness_exhausted) r.fields["budget_exhausted"] = true;
  r.fields["certificate"] = std::move(cert);
  return r;
}

std::optional<RunRecord> survey_record(const InputGraph& input,
                                       const Options& options) {
  const Graph& g = *input.graph;
  if (g.order() % 2 != 0 || !g.is_connected() || !is_biconnected(g)) {
    return std::nullopt;
  }
  const int nu = maximum_matching(g).size();
  RunRecord r;
  r.input_id = input.id;
  r.fields = base_fields(input, g, nu);
  r.fields["graph6"] = g.order() <= kGraph6MaxOrder ? json(encode_graph6(g))
                                                    : json();
  try {
    SolveResult s = ipp_exact(g, options.solver);
    if (s.proven && s.partition.size() < g.order() - nu) return std::nullopt;
    r.status = s.proven ? Status::kProven : Status::kBoundsOnly;
    r.fields["ipp"] = s.proven ? json(s.partition.size()) : json();
    r.fields["lower_bound"] = s.lower_bound;
    r.fields["upper_bound"] = s.partition.size();
  } catch (const BudgetExhaustedError& e) {
    r.status = Status::kBoundsOnly;
    r.budget_exhausted = true;
    r.fields["ipp"] = nullptr;
    r.fields["lower_bound"] = e.lower_bound();
    r.fields["upper_bound"] = e.upper_bound();
    r.fields["budget_exhausted"] = true;
  }
  r.fields["status"] = to_string(r.status);
  return r;
}

int cmd_exact(const Options& options, std::istream& in, std::ostream& out,
              std::ostream& err) {
  return run_records(
      options, in, out, err,
      [&](const InputGraph& input) -> std::optional<RunRecord> {
        return exact_record(input, options);
      },
      {"input_id", "n", "m", "nu", "ipp", "lower_bound", "upper_bound",
       "status"});
}

int cmd_classify(const Options& options, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  return run_records(
      options, in, out, err,
      [&](const InputGraph& input) -> std::optional<RunRecord> {
        return classify_record(input, options);
      },
      {"input_id", "n", "m", "nu", "verdict", "case", "ipp", "upper_bound",
       "status"});
}

int cmd_survey(const Options& options, std::istream& in, std::ostream& out,
               std::ostream& err) {
  return run_records(
      options, in, out, err,
      [&](const InputGraph& input) { return survey_record(input, options); },
      {"input_id", "n", "m", "nu", "ipp", "graph6", "status"});
}

int cmd_verify(const Options& options, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::vector<CorpusEntry> corpus;
  try {
    for (const std::string& spec : options.inputs) {
      append_corpus(spec, in, corpus);
    }
  } catch (const Error& e) {
    err << "ippkit verify: " << e.what() << "\n";
    return kParseError;
  }
  if (corpus.empty()) {
    err << "ippkit verify: corpus is empty\n";
    return kParseError;
  }
  SuiteOptions suite_options;
  suite_options.solver = options.solver;
  suite_options.jobs = options.jobs;
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results = run_invariant_suites(corpus, suite_options);
  std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;

  int code = kOk;
  std::vector<json> rows;
  for (const SuiteResult& s : results) {
    const char* status = s.failures > 0    ? "FAIL"
                         : s.exhausted > 0 ? "BUDGET_EXHAUSTED"
                                           : "PASS";
    if (s.failures > 0) code = std::max<int>(code, kInvariantFailure);
    if (s.exhausted > 0) code = std::max<int>(code, kBudgetExhausted);
    json row = {{"suite", to_string(s.suite)},
                {"status", status},
                {"graphs", static_cast<int>(corpus.size())},
                {"checked", s.checked},
                {"failures", s.failures},
                {"exhausted", s.exhausted}};
    if (s.failures > 0) {
      row["counterexample"] = s.counterexample;
      row["counterexample_id"] = s.counterexample_id;
      row["detail"] = s.detail;
    }
    if (options.timing) row["elapsed"] = secs.count();
    rows.push_back(std::move(row));
  }
  if (options.table) {
    std::vector<std::string> cols = {"suite",    "status",    "checked",
                                     "failures", "exhausted", "counterexample"};
    print_table(out, cols, rows);
  } else {
    for (const json& row : rows) out << row.dump() << "\n";
  }
  return code;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Isometric path partitions: exact solving, extremality "
               "classification and invariant checks."};
  app.require_subcommand(1);
  Options options;
  std::string format = "auto";
  std::int64_t node_budget = options.solver.node_budget;
  double time_budget = 60.0;
  std::int64_t max_paths = options.solver.max_paths_per_pair;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    sub->add_option("--jobs", options.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--node-budget", node_budget,
                    "Search nodes per exact solve")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", time_budget,
                    "Seconds per exact solve")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-paths", max_paths,
                    "Shortest paths kept per vertex pair")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--table", options.table, "Aligned columns instead of JSON");
    sub->add_flag("--witness", options.witness,
                  "Attach an IPP below the bound to NOT_EXTREMAL verdicts");
    sub->add_flag("--timing", options.timing, "Report elapsed seconds");
    sub->add_option("FILES", options.inputs, "Inputs; '-' is standard input")
        ->required();
  };
  CLI::App* exact = app.add_subcommand("exact", "Minimum IPP of each graph");
  CLI::App* classify =
      app.add_subcommand("classify", "Decide ipp = |V| - nu from the blocks");
  CLI::App* survey = app.add_subcommand(
      "survey", "Biconnected even graphs that meet ipp = |V| - nu");
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Invariant suites over connected:N, bundled:N or graph6 corpus files");
  for (CLI::App* sub : {exact, classify, survey, verify}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  options.format = format == "graph6"     ? InputFormat::kGraph6
                   : format == "edgelist" ? InputFormat::kEdgeList
                                          : InputFormat::kAuto;
  options.solver.node_budget = node_budget;
  options.solver.max_paths_per_pair = max_paths;
  options.solver.time_budget = std::chrono::milliseconds(
      std::max<std::int64_t>(1, static_cast<std::int64_t>(time_budget * 1000)));

  if (exact->parsed()) return cmd_exact(options, in, out, err);
  if (classify->parsed()) return cmd_classify(options, in, out, err);
  if (survey->parsed()) return cmd_survey(options, in, out, err);
  return cmd_verify(options, in, out, err);
}

}  // namespace ippkit::cli

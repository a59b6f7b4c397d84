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

#include "ippkit/invariants.h"

#include <gtest/gtest.h>

#include "ippkit/corpus.h"
#include "ippkit/graph6.h"
#include "ippkit/named_graphs.h"

namespace ippkit {
namespace {

std::vector<CorpusEntry> connected_corpus(int max_n) {
  std::vector<CorpusEntry> corpus;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : connected_graphs(n)) {
      corpus.push_back({std::move(g), "n" + std::to_string(n), std::nullopt});
    }
  }
  return corpus;
}

TEST(InvariantsTest, AllSuitesPassUpToSix) {
  std::vector<SuiteResult> results = run_invariant_suites(connected_corpus(6));
  ASSERT_EQ(results.size(), std::size(kAllSuites));
  for (const SuiteResult& r : results) {
    EXPECT_TRUE(r.passed()) << to_string(r.suite) << ": " << r.detail << " on "
                            << r.counterexample;
  }
}

TEST(InvariantsTest, ParallelRunIsIdentical) {
  std::vector<CorpusEntry> corpus = connected_corpus(6);
  SuiteOptions serial;
  SuiteOptions parallel;
  parallel.jobs = 4;
  auto a = run_invariant_suites(corpus, serial);
  auto b = run_invariant_suites(corpus, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].checked, b[i].checked);
    EXPECT_EQ(a[i].failures, b[i].failures);
  }
}

TEST(InvariantsTest, CorruptedExpectationIsReported) {
  std::vector<CorpusEntry> corpus{
      {named::complete(3), "ok", 2},
      {named::cycle(4), "bad", 3},
      {named::complete(5), "bad-too", 1},
  };
  std::vector<SuiteResult> results = run_invariant_suites(corpus);
  const SuiteResult& expected = results.back();
  ASSERT_EQ(expected.suite, Suite::kExpectedValues);
  EXPECT_EQ(expected.checked, 3);
  EXPECT_EQ(expected.failures, 2);
  EXPECT_EQ(expected.counterexample, encode_graph6(named::cycle(4)));
  EXPECT_EQ(expected.counterexample_id, "bad");
  EXPECT_FALSE(expected.passed());
}

TEST(InvariantsTest, DisconnectedGraphsOnlyCheckExpectations) {
  std::vector<Graph> parts{named::complete(3), named::path(3)};
  std::vector<CorpusEntry> corpus{{disjoint_union(parts), "union", 3}};
  for (const SuiteResult& r : run_invariant_suites(corpus)) {
    EXPECT_TRUE(r.passed()) << to_string(r.suite);
    EXPECT_EQ(r.checked, r.suite == Suite::kExpectedValues ? 1 : 0);
  }
}

TEST(InvariantsTest, SuiteNames) {
  EXPECT_STREQ(to_string(Suite::kExtremalClassification),
               "extremal-classification");
  EXPECT_STREQ(to_string(Suite::kExpectedValues), "expected-values");
}

}  // namespace
}  // namespace ippkit

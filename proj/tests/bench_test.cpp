// Copyright 2026 The immlab Authors
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

#include <gtest/gtest.h>

#include "immlab/bench.hpp"
#include "immlab/errors.hpp"
#include "support/brute.hpp"

namespace immlab {
namespace {

TEST(SolveTest, AutoOnC5TakesHoleFreeRoute) {
  const SolveResult r = solve_with_method(cycle_graph(5), "auto");
  EXPECT_EQ(r.method, "C4->forbholes");
  EXPECT_EQ(r.certificate.order(), 3);
  const SolveReport rep = make_report(cycle_graph(5), r, 0.0, true);
  EXPECT_TRUE(rep.verified);
  EXPECT_EQ(rep.alpha, 2);
  EXPECT_EQ(rep.omega, 2);
  EXPECT_EQ(rep.chi, 3);
}

TEST(SolveTest, NamedMethods) {
  const Graph co7 = complement(cycle_graph(7));
  EXPECT_EQ(solve_with_method(co7, "vergara:K4").certificate.order(), 4);
  EXPECT_EQ(solve_with_method(co7, "oracle").certificate.order(), brute::max_clique_immersion(co7));
  EXPECT_THROW(solve_with_method(complement(complete_graph(3)), "vergara:C4"), PreconditionError);
  EXPECT_THROW(solve_with_method(co7, "magic"), PreconditionError);
  EXPECT_THROW(solve_with_method(co7, "vergara:nope"), PreconditionError);
}

TEST(SolveTest, ReportRecomputesVerdict) {
  SolveResult r = solve_with_method(cycle_graph(5), "auto");
  r.certificate.paths.pop_back();
  const SolveReport rep = make_report(cycle_graph(5), r, 0.0, false);
  EXPECT_FALSE(rep.verified);
  EXPECT_EQ(rep.status, "verify_failed");
}

TEST(BenchTest, EmptyRun) {
  const auto s = run_bench({"lemma21", 0, 1, 1});
  EXPECT_EQ(s["passed"], 0);
  EXPECT_EQ(s["failed"], 0);
  EXPECT_TRUE(s["reports"].empty());
  EXPECT_THROW(run_bench({"nope", 0, 1, 1}), PreconditionError);
}

TEST(BenchTest, EverySuiteSmallRun) {
  for (std::string_view suite : bench_suites()) {
    const auto s = run_bench({std::string(suite), 8, 3, 2});
    EXPECT_EQ(s["passed"], 8) << suite << " " << s.dump();
    EXPECT_TRUE(s["violations"].empty());
  }
}

TEST(BenchTest, JobsDoNotChangeResults) {
  auto a = run_bench({"alpha2", 12, 5, 1});
  auto b = run_bench({"alpha2", 12, 5, 4});
  for (auto* s : {&a, &b}) {
    for (auto& r : (*s)["reports"]) r.erase("wall_ms");
  }
  EXPECT_EQ(a.dump(), b.dump());
}

}  // namespace
}  // namespace immlab

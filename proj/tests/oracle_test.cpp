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

#include "immlab/errors.hpp"
#include "immlab/oracle.hpp"
#include "support/brute.hpp"

namespace immlab {
namespace {

TEST(OracleTest, C5) {
  const auto c3 = brute_force_immersion(cycle_graph(5), 3);
  ASSERT_TRUE(c3.has_value());
  EXPECT_TRUE(verify_certificate(cycle_graph(5), *c3).accepted());
  EXPECT_FALSE(brute_force_immersion(cycle_graph(5), 4).has_value());
  EXPECT_EQ(max_immersion_order(cycle_graph(5)), 3);
}

TEST(OracleTest, SmallFixtures) {
  EXPECT_EQ(max_immersion_order(complete_graph(5)), 5);
  EXPECT_EQ(max_immersion_order(path_graph(4)), 2);
  const Graph co7 = complement(cycle_graph(7));
  const auto k4 = brute_force_immersion(co7, 4);
  ASSERT_TRUE(k4.has_value());
  EXPECT_TRUE(verify_certificate(co7, *k4).accepted());
}

TEST(OracleTest, AgreesWithNaiveSearch) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const Graph g = brute::random_graph(n, seed, 1 + static_cast<int>(seed % 3), 4);
    OracleBudget b;
    b.max_t = n;
    const int fast = max_immersion_order(g, b);
    EXPECT_EQ(fast, brute::max_clique_immersion(g)) << seed;
    if (fast > 0) {
      const auto c = brute_force_immersion(g, fast, b);
      ASSERT_TRUE(c.has_value());
      EXPECT_TRUE(brute::certificate_ok(g, *c));
    }
  }
}

TEST(OracleTest, BudgetLimits) {
  EXPECT_THROW(brute_force_immersion(complete_graph(11), 3), PreconditionError);
  EXPECT_THROW(brute_force_immersion(complete_graph(5), 7), PreconditionError);
  OracleBudget tiny;
  tiny.node_limit = 1;
  EXPECT_THROW(brute_force_immersion(cycle_graph(5), 3, tiny), BudgetExceeded);
}

}  // namespace
}  // namespace immlab

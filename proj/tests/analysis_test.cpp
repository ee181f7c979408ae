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

#include "immlab/analysis.hpp"
#include "immlab/errors.hpp"
#include "immlab/inflation.hpp"
#include "immlab/pattern.hpp"
#include "support/brute.hpp"

namespace immlab {
namespace {

TEST(AnalysisTest, SmallFixtures) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(complete_graph(6)), 1);
  EXPECT_EQ(independence_number(complement(cycle_graph(7))), 2);
  EXPECT_EQ(clique_number(build_inflation({cycle_graph(4), {2, 1, 2, 1}}).graph), 3);
  const CliqueResult k5 = max_clique(complete_graph(5));
  EXPECT_EQ(k5.size, 5);
  EXPECT_EQ(k5.witness, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(clique_number(complement(cycle_graph(4))), 2);
  EXPECT_EQ(chromatic_number(cycle_graph(5)).colors, 3);
  EXPECT_EQ(chromatic_number(build_inflation({cycle_graph(5), {2, 2, 2, 2, 2}}).graph).colors, 5);
}

TEST(AnalysisTest, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = brute::random_graph(n, seed, 1 + static_cast<int>(seed % 3), 4);
    EXPECT_EQ(clique_number(g), brute::clique_number(g)) << seed;
    EXPECT_EQ(independence_number(g), brute::independence_number(g)) << seed;
    const Coloring c = chromatic_number(g);
    EXPECT_EQ(c.colors, brute::chromatic_number(g)) << seed;
    EXPECT_TRUE(is_proper_coloring(g, c.color));
    EXPECT_EQ(colors_used(c.color), c.colors);
    const CliqueResult mc = max_clique(g);
    EXPECT_TRUE(is_clique(g, mc.witness));
    EXPECT_EQ(static_cast<int>(mc.witness.size()), mc.size);
  }
}

TEST(AnalysisTest, ChromaticLimit) {
  EXPECT_THROW(chromatic_number(complete_graph(25)), PreconditionError);
}

TEST(AnalysisTest, FindInducedExamples) {
  const auto p4 = find_induced(pattern(PatternKind::House).graph, PatternKind::P4);
  ASSERT_TRUE(p4.has_value());
  EXPECT_FALSE(find_induced(cycle_graph(5), PatternKind::C4).has_value());
  const auto two = find_induced(pattern(PatternKind::Owh).graph, PatternKind::TwoK2);
  ASSERT_TRUE(two.has_value());
  const Graph& h = pattern(PatternKind::Owh).graph;
  const auto& m = *two;
  EXPECT_TRUE(h.adjacent(m[0], m[1]));
  EXPECT_TRUE(h.adjacent(m[2], m[3]));
  EXPECT_FALSE(h.adjacent(m[0], m[2]) || h.adjacent(m[0], m[3]) || h.adjacent(m[1], m[2]) ||
               h.adjacent(m[1], m[3]));
}

TEST(AnalysisTest, FindInducedAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = brute::random_graph(7, seed);
    for (PatternKind p : all_patterns()) {
      const Graph& h = pattern(p).graph;
      const auto hit = find_induced(g, h);
      ASSERT_EQ(hit.has_value(), brute::contains_induced(g, h)) << pattern_name(p) << seed;
      if (!hit) continue;
      for (int i = 0; i < h.order(); ++i) {
        for (int j = i + 1; j < h.order(); ++j) {
          EXPECT_EQ(g.adjacent((*hit)[i], (*hit)[j]), h.adjacent(i, j));
        }
      }
    }
  }
}

TEST(AnalysisTest, Holes) {
  EXPECT_FALSE(find_hole_in_range(cycle_graph(7), 4, 6).has_value());
  const auto c7 = find_hole_in_range(cycle_graph(7), 4, 7);
  ASSERT_TRUE(c7.has_value());
  EXPECT_EQ(c7->length(), 7);
  const auto sq = find_hole_in_range(pattern(PatternKind::House).graph, 4, 4);
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->cycle, (std::vector<Vertex>{0, 1, 2, 3}));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = brute::random_graph(9, seed, 2, 5);
    for (int lo = 4; lo <= 6; ++lo) {
      const auto h = find_hole_in_range(g, lo, lo + 2);
      EXPECT_EQ(h.has_value(), brute::has_hole_in_range(g, lo, lo + 2)) << seed;
      if (h) {
        EXPECT_TRUE(is_hole(g, h->cycle));
      }
    }
  }
}

TEST(AnalysisTest, ChordalOrdering) {
  EXPECT_TRUE(chordal_decompose(path_graph(6)).has_value());
  EXPECT_FALSE(chordal_decompose(cycle_graph(4)).has_value());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = brute::random_graph(10, seed, 2, 3);
    const auto peo = chordal_decompose(g);
    EXPECT_EQ(peo.has_value(), !brute::has_hole_in_range(g, 4, g.order())) << seed;
    if (peo) {
      EXPECT_EQ(max_clique_from_peo(g, *peo).size, brute::clique_number(g));
      EXPECT_EQ(chromatic_number(g).colors, clique_number(g));
    }
  }
}

}  // namespace
}  // namespace immlab

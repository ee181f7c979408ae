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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "immlab/analysis.hpp"
#include "immlab/construct.hpp"
#include "immlab/errors.hpp"
#include "immlab/gen.hpp"
#include "immlab/inflation.hpp"
#include "immlab/pattern.hpp"
#include "support/brute.hpp"

namespace immlab {
namespace {

void expect_valid(const Graph& g, const ImmersionCertificate& c) {
  EXPECT_TRUE(verify_certificate(g, c).accepted()) << verify_certificate(g, c).detail;
  EXPECT_TRUE(brute::certificate_ok(g, c));
}

// Path inflations

TEST(PathInflationTest, SingleEdge) {
  const Inflation inf = build_inflation({path_graph(2), {1, 1}});
  const ImmersionCertificate c = path_inflation_clique_immersion(inf.graph, inf.bags);
  EXPECT_EQ(c.order(), 2);
  expect_valid(inf.graph, c);
}

TEST(PathInflationTest, ThreeFiveThreeFive) {
  const Inflation inf = build_inflation({path_graph(4), {3, 5, 3, 5}});
  const ImmersionCertificate c = path_inflation_clique_immersion(inf.graph, inf.bags);
  expect_valid(inf.graph, c);
  EXPECT_EQ(c.order(), 8);
  VertexSet want = inf.bags.bags[0];
  want.insert(want.end(), inf.bags.bags[3].begin(), inf.bags.bags[3].end());
  EXPECT_EQ(c.branch, want);
  int cross = 0;
  for (const CertPath& p : c.paths) {
    if (p.walk.size() > 2) {
      ++cross;
      // Alternates between consecutive bags: one vertex per bag along the way.
      EXPECT_EQ(p.walk.size(), 4u);
    }
  }
  EXPECT_EQ(cross, 15);
}

TEST(PathInflationTest, AllTwosMatchesOracle) {
  const Inflation inf = build_inflation({path_graph(4), {2, 2, 2, 2}});
  const ImmersionCertificate c = path_inflation_clique_immersion(inf.graph, inf.bags);
  expect_valid(inf.graph, c);
  EXPECT_EQ(c.order(), 4);
  EXPECT_TRUE(brute::immerses_clique(inf.graph, 4));
}

TEST(PathInflationTest, RejectsViolatedHypotheses) {
  const Inflation small_last = build_inflation({path_graph(4), {1, 3, 2, 3}});
  EXPECT_NO_THROW(path_inflation_clique_immersion(small_last.graph, small_last.bags));
  const Inflation big_first = build_inflation({path_graph(4), {3, 2, 2, 3}});
  EXPECT_THROW(path_inflation_clique_immersion(big_first.graph, big_first.bags),
               PreconditionError);
  const Inflation big_last = build_inflation({path_graph(4), {1, 2, 2, 3}});
  BagMap swapped = big_last.bags;
  std::swap(swapped.bags[1], swapped.bags[3]);
  EXPECT_THROW(path_inflation_clique_immersion(big_last.graph, swapped), PreconditionError);
  const Inflation odd = build_inflation({path_graph(3), {1, 1, 1}});
  EXPECT_THROW(path_inflation_clique_immersion(odd.graph, odd.bags), PreconditionError);
}

TEST(PathInflationTest, RandomInstancesHitPPlusQ) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeneratedInflation gi =
        random_inflation(InflationKind::kPath, 2 + 2 * static_cast<int>(seed % 4), 4, seed);
    const ImmersionCertificate c =
        path_inflation_clique_immersion(gi.inflation.graph, gi.inflation.bags);
    expect_valid(gi.inflation.graph, c);
    EXPECT_EQ(c.order(), gi.spec.bag_sizes.front() + gi.spec.bag_sizes.back());
  }
}

// Cycle inflations

TEST(CycleInflationTest, Examples) {
  struct Case {
    int k;
    std::vector<int> f;
    int order;
    int chi;
  };
  // The doubled C5 has chi 5, but the recursion lands on K6, which the
  // oracle confirms is the largest clique it immerses.
  for (const Case& tc : std::vector<Case>{{3, {1, 1, 1}, 3, 3},
                                          {5, {2, 2, 2, 2, 2}, 6, 5},
                                          {7, {1, 1, 1, 1, 1, 1, 1}, 3, 3}}) {
    const Inflation inf = build_inflation({cycle_graph(tc.k), tc.f});
    const CycleInflationResult r = cycle_inflation_clique_immersion(inf.graph, inf.bags);
    expect_valid(inf.graph, r.certificate);
    EXPECT_EQ(r.certificate.order(), tc.order);
    EXPECT_EQ(r.coloring.colors, tc.order);
    EXPECT_TRUE(is_proper_coloring(inf.graph, r.coloring.color));
    EXPECT_EQ(chromatic_number(inf.graph).colors, tc.chi);
    const ImmersionCertificate at_chi = trim_certificate(r.certificate, tc.chi);
    expect_valid(inf.graph, at_chi);
  }
}

TEST(CycleInflationTest, RecursionComposes) {
  const Inflation inf = build_inflation({cycle_graph(7), {1, 1, 1, 1, 1, 2, 2}});
  const CycleInflationResult r = cycle_inflation_clique_immersion(inf.graph, inf.bags);
  expect_valid(inf.graph, r.certificate);
  EXPECT_GE(r.certificate.order(), chromatic_number(inf.graph).colors);
}

TEST(CycleInflationTest, RandomInstancesProperAndAtLeastChi) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const GeneratedInflation gi =
        random_inflation(InflationKind::kCycle, 3 + static_cast<int>(seed % 7), 4, seed);
    const CycleInflationResult r =
        cycle_inflation_clique_immersion(gi.inflation.graph, gi.inflation.bags);
    expect_valid(gi.inflation.graph, r.certificate);
    EXPECT_TRUE(is_proper_coloring(gi.inflation.graph, r.coloring.color));
    EXPECT_EQ(r.certificate.order(), r.coloring.colors);
    EXPECT_GE(r.certificate.order(), inflation_chromatic_number(gi.spec).colors);
  }
}

TEST(CycleInflationTest, RejectsWrongBags) {
  const Inflation inf = build_inflation({cycle_graph(5), {1, 1, 1, 1, 1}});
  EXPECT_THROW(cycle_inflation_clique_immersion(inf.graph, BagMap{{{0}, {1}}}),
               PreconditionError);
  BagMap shuffled = inf.bags;
  std::swap(shuffled.bags[0], shuffled.bags[2]);
  EXPECT_THROW(cycle_inflation_clique_immersion(inf.graph, shuffled), PreconditionError);
}

// Forbidden holes

std::set<VertexSet> as_set(const BagMap& m) { return {m.bags.begin(), m.bags.end()}; }

TEST(HoleFreeTest, DecomposeC5) {
  const Graph g = cycle_graph(5);
  const auto hole = find_hole_in_range(g, 5, 5);
  ASSERT_TRUE(hole);
  const HoleDecomposition d = decompose_around_long_hole(g, *hole);
  EXPECT_EQ(d.bags.size(), 5);
  for (const VertexSet& b : d.bags.bags) EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE(d.universal.empty());
}

TEST(HoleFreeTest, DecomposeRecoversGroundTruth) {
  ForbholesOptions opt;
  opt.bags = {2, 1, 1, 2, 1};
  opt.universal = 2;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ForbholesInstance fi = forbholes_family(2, seed, opt);
    const auto hole = find_hole_in_range(fi.graph, 5, 5);
    ASSERT_TRUE(hole);
    const HoleDecomposition d = decompose_around_long_hole(fi.graph, *hole);
    EXPECT_EQ(as_set(d.bags), as_set(fi.bags));
    EXPECT_EQ(d.universal, fi.universal);
  }
}

TEST(HoleFreeTest, DecomposeC7) {
  const Graph g = cycle_graph(7);
  const HoleDecomposition d = decompose_around_long_hole(g, *find_hole_in_range(g, 7, 7));
  EXPECT_EQ(d.bags.size(), 7);
  EXPECT_TRUE(d.universal.empty());
}

TEST(HoleFreeTest, Examples) {
  const ImmersionCertificate k5 = hole_free_immersion(complete_graph(5));
  EXPECT_EQ(k5.order(), 5);
  expect_valid(complete_graph(5), k5);

  const ImmersionCertificate c7 = hole_free_immersion(cycle_graph(7));
  EXPECT_EQ(c7.order(), 3);
  expect_valid(cycle_graph(7), c7);

  ForbholesOptions opt;
  opt.bags = {2, 2, 2, 2, 2};
  opt.universal = 2;
  const ForbholesInstance fi = forbholes_family(2, 3, opt);
  EXPECT_EQ(fi.graph.order(), 12);
  const ImmersionCertificate c = hole_free_immersion(fi.graph);
  expect_valid(fi.graph, c);
  EXPECT_EQ(c.order(), 7);
  EXPECT_EQ(chromatic_number(fi.graph).colors, 7);
}

TEST(HoleFreeTest, RejectsShortHole) {
  EXPECT_THROW(hole_free_immersion(cycle_graph(4)), PreconditionError);
  // alpha = 3 with a 6-hole.
  EXPECT_THROW(hole_free_immersion(cycle_graph(6)), PreconditionError);
}

TEST(HoleFreeTest, OrderIsChiOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ForbholesInstance fi = forbholes_family(2 + static_cast<int>(seed % 2), seed);
    const ImmersionCertificate c = hole_free_immersion(fi.graph);
    expect_valid(fi.graph, c);
    const int chi_a = inflation_chromatic_number({cycle_graph(fi.bags.size()), fi.bags.sizes()}).colors;
    EXPECT_EQ(c.order(), chi_a + static_cast<int>(fi.universal.size()));
    if (fi.graph.order() <= 18) {
      EXPECT_EQ(c.order(), chromatic_number(fi.graph).colors);
    }
  }
}

// Extension lemmas

ImmersionCertificate empty_cert(const Graph& g) { return make_certificate(g, {}, {}); }

TEST(ExtensionTest, C4Alone) {
  const Graph g = cycle_graph(4);
  const std::vector<Vertex> h{0, 1, 2, 3};
  const ImmersionCertificate sub = empty_cert(g);
  const ImmersionCertificate c =
      extend_over_dominating_c4(make_extension_context(g, ExtensionShape::kC4, h, sub), sub);
  expect_valid(g, c);
  EXPECT_EQ(c.order(), 2);
}

TEST(ExtensionTest, C4JoinK2) {
  const Graph g = join(cycle_graph(4), complete_graph(2));
  const std::vector<Vertex> h{0, 1, 2, 3};
  const ImmersionCertificate sub = clique_certificate(g, VertexSet{4});
  const ImmersionCertificate c =
      extend_over_dominating_c4(make_extension_context(g, ExtensionShape::kC4, h, sub), sub);
  expect_valid(g, c);
  EXPECT_EQ(c.order(), 3);
  EXPECT_TRUE(brute::immerses_clique(g, 3));
}

TEST(ExtensionTest, C5Alone) {
  const Graph g = cycle_graph(5);
  const std::vector<Vertex> h{0, 1, 2, 3, 4};
  const ImmersionCertificate sub = clique_certificate(g, VertexSet{4});
  const ImmersionCertificate c =
      extend_over_dominating_c5(make_extension_context(g, ExtensionShape::kC5, h, sub), sub);
  expect_valid(g, c);
  EXPECT_EQ(c.order(), 3);
}

TEST(ExtensionTest, C5JoinK1BothSubcerts) {
  const Graph g = join(cycle_graph(5), complete_graph(1));
  const std::vector<Vertex> h{0, 1, 2, 3, 4};
  for (Vertex m : {4, 5}) {
    const ImmersionCertificate sub = clique_certificate(g, VertexSet{m});
    const ImmersionCertificate c =
        extend_over_dominating_c5(make_extension_context(g, ExtensionShape::kC5, h, sub), sub);
    expect_valid(g, c);
    EXPECT_EQ(c.order(), 3);
  }
  EXPECT_TRUE(brute::immerses_clique(g, 3));
}

TEST(ExtensionTest, P4AloneAndJoined) {
  const Graph p4 = path_graph(4);
  const std::vector<Vertex> h{0, 1, 2, 3};
  const ImmersionCertificate none = empty_cert(p4);
  const ImmersionCertificate c =
      extend_over_dominating_p4(make_extension_context(p4, ExtensionShape::kP4, h, none), none);
  expect_valid(p4, c);
  EXPECT_EQ(c.order(), 2);

  const Graph g = join(path_graph(4), complete_graph(2));
  const ImmersionCertificate sub = clique_certificate(g, VertexSet{5});
  const ImmersionCertificate c3 =
      extend_over_dominating_p4(make_extension_context(g, ExtensionShape::kP4, h, sub), sub);
  expect_valid(g, c3);
  EXPECT_EQ(c3.order(), 3);
  EXPECT_TRUE(brute::immerses_clique(g, 3));
}

TEST(ExtensionTest, ContextRejectsBrokenHypotheses) {
  const Graph g = join(cycle_graph(4), complete_graph(2));
  const ImmersionCertificate sub = clique_certificate(g, VertexSet{4});
  // Not an induced C4 in this order.
  EXPECT_THROW(make_extension_context(g, ExtensionShape::kC4, std::vector<Vertex>{0, 2, 1, 3}, sub),
               PreconditionError);
  // Wrong sub-certificate size.
  const ImmersionCertificate big = clique_certificate(g, VertexSet{4, 5});
  EXPECT_THROW(make_extension_context(g, ExtensionShape::kC4, std::vector<Vertex>{0, 1, 2, 3}, big),
               PreconditionError);
  // Vertex 4 sees only a1 of the C4, so edge a2a3 misses it.
  const Graph pendant = GraphBuilder(5).add_edge(0, 1).add_edge(1, 2).add_edge(2, 3)
                            .add_edge(0, 3).add_edge(0, 4).build();
  const ImmersionCertificate one = clique_certificate(pendant, VertexSet{4});
  EXPECT_THROW(
      make_extension_context(pendant, ExtensionShape::kC4, std::vector<Vertex>{0, 1, 2, 3}, one),
      PreconditionError);
}

TEST(ExtensionTest, FuzzedFamilies) {
  for (ExtensionShape shape : {ExtensionShape::kC4, ExtensionShape::kC5, ExtensionShape::kP4}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int lo = shape == ExtensionShape::kC5 ? 5 : 4;
      const DominatingInstance d = dominating_family(shape, lo + static_cast<int>(seed % 12), seed);
      const Subgraph rest = delete_vertices(d.graph, std::span<const Vertex>(d.h.data(), 4));
      const ImmersionCertificate sub =
          lift_certificate(owh_free_immersion(rest.graph), rest.to_parent, d.graph);
      const ExtensionContext ctx = make_extension_context(d.graph, shape, d.h, sub);
      const ImmersionCertificate c = shape == ExtensionShape::kC4 ? extend_over_dominating_c4(ctx, sub)
                                     : shape == ExtensionShape::kC5
                                         ? extend_over_dominating_c5(ctx, sub)
                                         : extend_over_dominating_p4(ctx, sub);
      expect_valid(d.graph, c);
      EXPECT_EQ(c.order(), half_up(d.graph.order()));
    }
  }
}

// Recursions

TEST(RecursionTest, HouseFreeExamples) {
  const ImmersionCertificate c5 = house_free_immersion(cycle_graph(5));
  EXPECT_EQ(c5.order(), 3);
  expect_valid(cycle_graph(5), c5);
  const ImmersionCertificate k7 = house_free_immersion(complete_graph(7));
  EXPECT_EQ(k7.order(), 4);
  EXPECT_THROW(house_free_immersion(pattern(PatternKind::House).graph), PreconditionError);
  EXPECT_THROW(house_free_immersion(complement(complete_graph(3))), PreconditionError);
}

TEST(RecursionTest, OwhFreeExamples) {
  const ImmersionCertificate c5 = owh_free_immersion(cycle_graph(5));
  EXPECT_EQ(c5.order(), 3);
  expect_valid(cycle_graph(5), c5);
  const Graph k6 = join(complete_graph(3), complete_graph(3));
  EXPECT_EQ(owh_free_immersion(k6).order(), 3);
  EXPECT_THROW(owh_free_immersion(pattern(PatternKind::Owh).graph), PreconditionError);
}

TEST(RecursionTest, RandomHouseAndOwhFree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 24);
    const Graph hg = random_hfree_alpha2(PatternKind::House, n, seed);
    const ImmersionCertificate a = house_free_immersion(hg);
    expect_valid(hg, a);
    EXPECT_EQ(a.order(), half_up(n));
    const Graph og = random_hfree_alpha2(PatternKind::Owh, n, seed);
    const ImmersionCertificate b = owh_free_immersion(og);
    expect_valid(og, b);
    EXPECT_EQ(b.order(), half_up(n));
  }
}

// Small cases

TEST(SmallCasesTest, K4FreeExamples) {
  const ImmersionCertificate c5 = k4_free_immersion(cycle_graph(5));
  EXPECT_EQ(c5.order(), 3);
  expect_valid(cycle_graph(5), c5);
  const Graph co7 = complement(cycle_graph(7));
  const ImmersionCertificate k4 = k4_free_immersion(co7);
  EXPECT_EQ(k4.order(), 4);
  expect_valid(co7, k4);
  EXPECT_TRUE(brute::immerses_clique(co7, 4));
  EXPECT_EQ(k4_free_immersion(complete_graph(3)).order(), 2);
  EXPECT_THROW(k4_free_immersion(complete_graph(4)), PreconditionError);
}

TEST(SmallCasesTest, SevenVertexCaseAnalysisNeedsNoOracle) {
  int notes = 0;
  set_log_sink([&](std::string_view) { ++notes; });
  int sevens = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_hfree_alpha2(PatternKind::K4, 7, seed);
    ++sevens;
    expect_valid(g, k4_free_immersion(g));
  }
  set_log_sink(nullptr);
  EXPECT_EQ(sevens, 200);
  EXPECT_EQ(notes, 0);
}

TEST(SmallCasesTest, K4FreeAllOrders) {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_hfree_alpha2(PatternKind::K4, n, seed);
      const ImmersionCertificate c = k4_free_immersion(g);
      expect_valid(g, c);
      EXPECT_EQ(c.order(), half_up(n));
    }
  }
}

TEST(SmallCasesTest, K4MinusExamples) {
  const K4MinusResult c5 = k4minus_free_clique(cycle_graph(5));
  EXPECT_FALSE(c5.partition.has_value());
  EXPECT_EQ(c5.certificate.order(), 3);
  expect_valid(cycle_graph(5), c5.certificate);

  const Graph k6 = join(complete_graph(3), complete_graph(3));
  const K4MinusResult r6 = k4minus_free_clique(k6);
  ASSERT_TRUE(r6.partition.has_value());
  EXPECT_EQ(r6.certificate.order(), 3);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 20);
    const Graph g = random_hfree_alpha2(PatternKind::K4minus, n, seed);
    const K4MinusResult r = k4minus_free_clique(g);
    expect_valid(g, r.certificate);
    if (!r.partition) continue;
    VertexSet all = r.partition->first;
    all.insert(all.end(), r.partition->second.begin(), r.partition->second.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(static_cast<int>(all.size()), n);
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    EXPECT_TRUE(is_clique(g, r.partition->first));
    EXPECT_TRUE(is_clique(g, r.partition->second));
    EXPECT_GE(static_cast<int>(std::max(r.partition->first.size(), r.partition->second.size())),
              half_up(n));
  }
}

TEST(SmallCasesTest, TriangleFromCycle) {
  EXPECT_FALSE(triangle_immersion_from_cycle(path_graph(5)).has_value());
  const auto c = triangle_immersion_from_cycle(cycle_graph(6));
  ASSERT_TRUE(c.has_value());
  expect_valid(cycle_graph(6), *c);
}

// Dispatcher

TEST(VergaraTest, Examples) {
  const Graph co7 = complement(cycle_graph(7));
  EXPECT_EQ(vergara_solve(co7, PatternKind::K4).order(), 4);
  EXPECT_EQ(vergara_solve(cycle_graph(5), PatternKind::C4).order(), 3);
  EXPECT_EQ(vergara_solve(complete_graph(6), PatternKind::P4).order(), 3);
  EXPECT_THROW(vergara_solve(complement(complete_graph(3)), PatternKind::C4), PreconditionError);
  EXPECT_THROW(vergara_solve(cycle_graph(5), PatternKind::C5), PreconditionError);
  EXPECT_THROW(vergara_solve(cycle_graph(4), PatternKind::C4), PreconditionError);
}

TEST(VergaraTest, AllSevenPatternsOnRandomInstances) {
  for (PatternKind p : four_vertex_alpha2_patterns()) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const int n = 1 + static_cast<int>(seed % (p == PatternKind::K4 ? 8 : 16));
      const Graph g = random_hfree_alpha2(p, n, seed);
      const ImmersionCertificate c = vergara_solve(g, p);
      expect_valid(g, c);
      EXPECT_EQ(c.order(), half_up(n)) << pattern_name(p);
    }
  }
}

}  // namespace
}  // namespace immlab

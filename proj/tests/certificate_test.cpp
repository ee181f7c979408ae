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
#include "immlab/certificate.hpp"
#include "immlab/construct.hpp"
#include "immlab/errors.hpp"
#include "immlab/gen.hpp"
#include "immlab/graph_io.hpp"
#include "support/brute.hpp"

namespace immlab {
namespace {

ImmersionCertificate c5_triangle() {
  return make_certificate(cycle_graph(5), {0, 1, 2},
                          {{0, 1, {0, 1}}, {1, 2, {1, 2}}, {2, 0, {2, 3, 4, 0}}});
}

TEST(CertificateTest, AcceptsC5Triangle) {
  const ImmersionCertificate c = c5_triangle();
  EXPECT_TRUE(verify_certificate(cycle_graph(5), c).accepted());
  EXPECT_TRUE(brute::certificate_ok(cycle_graph(5), c));
  EXPECT_EQ(c.order(), 3);
}

TEST(CertificateTest, RejectsReusedEdgeAndBranchInterior) {
  const Graph g = cycle_graph(5);
  const ImmersionCertificate bad =
      make_certificate(g, {0, 1, 2}, {{0, 1, {0, 1}}, {1, 2, {1, 2}}, {2, 0, {2, 1, 0}}});
  const CertificateVerdict v = verify_certificate(g, bad);
  EXPECT_FALSE(v.accepted());
  EXPECT_TRUE(v.violated == Condition::kEdgeDisjoint || v.violated == Condition::kBranchInterior);
  EXPECT_FALSE(brute::certificate_ok(g, bad));
}

TEST(CertificateTest, NamesEachCondition) {
  const Graph g = cycle_graph(5);
  ImmersionCertificate c = c5_triangle();
  c.paths.pop_back();
  EXPECT_EQ(verify_certificate(g, c).violated, Condition::kRoutes);

  // Branch vertex 1 inside a route, no edge reuse.
  const Graph k4 = complete_graph(4);
  const Graph k4_tail = GraphBuilder(5).add_edge(0, 1).add_edge(0, 2).add_edge(0, 3)
                            .add_edge(1, 2).add_edge(1, 3).add_edge(2, 3)
                            .add_edge(1, 4).add_edge(2, 4).build();
  ImmersionCertificate interior = clique_certificate(k4_tail, VertexSet{0, 1, 2});
  interior.paths[1].walk = {0, 3, 1, 4, 2};  // pair (0, 2)
  EXPECT_EQ(verify_certificate(k4_tail, interior).violated, Condition::kBranchInterior);

  ImmersionCertificate reuse = clique_certificate(k4, VertexSet{0, 1, 2});
  reuse.paths[1].walk = {0, 3, 2};
  reuse.paths[2].walk = {1, 3, 2};  // edge 3-2 twice
  EXPECT_EQ(verify_certificate(k4, reuse).violated, Condition::kEdgeDisjoint);

  ImmersionCertificate off = c5_triangle();
  off.paths[0].walk = {0, 3, 1};  // 0-3 is not an edge of C5
  EXPECT_EQ(verify_certificate(g, off).violated, Condition::kRoutes);

  ImmersionCertificate wrong_host = c5_triangle();
  wrong_host.host_sha256 = graph_sha256(complete_graph(5));
  EXPECT_EQ(verify_certificate(g, wrong_host).violated, Condition::kHostMismatch);
}

TEST(CertificateTest, JsonRoundTrip) {
  const ImmersionCertificate c = c5_triangle();
  EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
  auto j = certificate_to_json(c);
  j["order"] = 4;
  EXPECT_THROW(certificate_from_json(j), PreconditionError);
}

TEST(CertificateTest, TrimKeepsValidity) {
  const Graph k5 = complete_graph(5);
  const ImmersionCertificate full = clique_certificate(k5, VertexSet{0, 1, 2, 3, 4});
  const ImmersionCertificate t3 = trim_certificate(full, 3);
  EXPECT_EQ(t3.order(), 3);
  EXPECT_TRUE(verify_certificate(k5, t3).accepted());
  EXPECT_EQ(trim_certificate(full, 5), full);
}

TEST(CertificateTest, TrimForbholesToHalf) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ForbholesOptions opt;
    opt.universal = 0;
    const ForbholesInstance fi = forbholes_family(2, seed, opt);
    const ImmersionCertificate c = hole_free_immersion(fi.graph);
    const ImmersionCertificate t = trim_certificate(c, half_up(fi.graph.order()));
    EXPECT_TRUE(verify_certificate(fi.graph, t).accepted());
  }
}

TEST(CertificateTest, ExtendWithUniversal) {
  const Graph g = join(cycle_graph(4), complete_graph(1));
  const ImmersionCertificate k2 = clique_certificate(g, VertexSet{0, 1});
  const ImmersionCertificate k3 = extend_with_universal(g, k2, VertexSet{4});
  EXPECT_EQ(k3.order(), 3);
  EXPECT_TRUE(verify_certificate(g, k3).accepted());
  EXPECT_EQ(extend_with_universal(g, k2, VertexSet{}), k2);
}

TEST(CertificateTest, ComposeIdentities) {
  // Outer is the identity immersion of K4 into itself.
  const Graph k4 = complete_graph(4);
  Immersion id;
  id.phi = {0, 1, 2, 3};
  for (const Edge& e : k4.edges()) id.routes[e] = {e.u, e.v};
  const ImmersionCertificate inner = clique_certificate(k4, VertexSet{0, 1, 2, 3});
  EXPECT_EQ(compose_certificates(k4, k4, id, inner), inner);

  // Inner is a direct-edge clique of the pattern: output is outer restricted.
  const Graph host = cycle_graph(6);
  const Graph pat = cycle_graph(3);
  Immersion tri;
  tri.phi = {0, 2, 4};
  tri.routes[Edge{0, 1}] = {0, 1, 2};
  tri.routes[Edge{1, 2}] = {2, 3, 4};
  tri.routes[Edge{0, 2}] = {0, 5, 4};
  EXPECT_TRUE(verify_immersion(host, pat, tri).accepted());
  const ImmersionCertificate k3 = clique_certificate(pat, VertexSet{0, 1, 2});
  const ImmersionCertificate out = compose_certificates(host, pat, tri, k3);
  EXPECT_TRUE(verify_certificate(host, out).accepted());
  EXPECT_EQ(out.branch, (VertexSet{0, 2, 4}));
  EXPECT_EQ(out.path_between(0, 4)->walk, (std::vector<Vertex>{0, 5, 4}));
}

TEST(CertificateTest, LiftRebindsToParent) {
  const Graph g = join(cycle_graph(5), complete_graph(1));
  const Subgraph s = delete_vertices(g, std::vector<Vertex>{5});
  const ImmersionCertificate sub = c5_triangle();
  const ImmersionCertificate up = lift_certificate(sub, s.to_parent, g);
  EXPECT_TRUE(verify_certificate(g, up).accepted());
  EXPECT_EQ(up.host_sha256, graph_sha256(g));
}

TEST(CertificateTest, ShortcutWalk) {
  const std::vector<Vertex> w{0, 1, 2, 1, 3};
  EXPECT_EQ(shortcut_walk(w), (std::vector<Vertex>{0, 1, 3}));
}

}  // namespace
}  // namespace immlab

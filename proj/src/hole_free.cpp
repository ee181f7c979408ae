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

#include "construct_internal.hpp"
#include "immlab/construct.hpp"

namespace immlab {

HoleDecomposition decompose_around_long_hole(const Graph& g, const HoleReport& hole) {
  const int len = hole.length();
  if (len < 5 || len % 2 == 0 || !is_hole(g, hole.cycle)) {
    throw PreconditionError("decompose_around_long_hole: expected an induced odd cycle of length >= 5");
  }
  detail::ClaimChecker claim(g, "decompose_around_long_hole");
  claim.context()["hole"] = hole.cycle;

  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < len; ++i) position[hole.cycle[i]] = i;

  HoleDecomposition out;
  out.bags.bags.resize(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.bags.bags[i].push_back(hole.cycle[(i + 1) % len]);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (position[u] >= 0) continue;
    std::vector<char> adj(static_cast<std::size_t>(len));
    int count = 0;
    for (int i = 0; i < len; ++i) count += adj[i] = g.adjacent(u, hole.cycle[i]);
    if (count == len) {
      out.universal.push_back(u);
      continue;
    }
    int start = -1;
    if (count == 3) {
      for (int i = 0; i < len; ++i) {
        if (adj[i] && adj[(i + 1) % len] && adj[(i + 2) % len]) start = i;
      }
    }
    if (start < 0) {
      claim.fail("vertex " + std::to_string(u) +
                 " is adjacent neither to the whole hole nor to exactly three consecutive hole "
                 "vertices");
    }
    out.bags.bags[start].push_back(u);
  }
  for (VertexSet& b : out.bags.bags) std::sort(b.begin(), b.end());

  const Verdict bags_ok = bag_invariant_check(g, cycle_graph(len), out.bags, false);
  claim(bags_ok.ok, "bags form an inflated cycle: " + bags_ok.reason);
  for (Vertex u : out.universal) {
    claim(g.degree(u) == g.order() - 1,
          "vertex " + std::to_string(u) + " adjacent to the whole hole is universal");
  }
  return out;
}

ImmersionCertificate hole_free_immersion(const Graph& g) {
  const int n = g.order();
  if (n == 0) return make_certificate(g, {}, {});
  const int alpha = independence_number(g);
  if (alpha <= 1) return clique_certificate(g, detail::all_vertices(g));
  if (2 * alpha >= 4 && n >= 4) {
    if (auto hole = find_hole_in_range(g, 4, std::min(2 * alpha, n))) {
      throw PreconditionError("hole_free_immersion: graph has a hole of length " +
                              std::to_string(hole->length()) + " <= 2*alpha");
    }
  }
  detail::ClaimChecker claim(g, "hole_free_immersion");
  std::optional<HoleReport> hole;
  if (2 * alpha + 1 <= n) hole = find_hole_in_range(g, 2 * alpha + 1, 2 * alpha + 1);

  if (!hole) {
    const auto peo = chordal_decompose(g);
    claim(peo.has_value(), "graph without long holes is chordal");
    const CliqueResult cl = max_clique_from_peo(g, *peo);
    ImmersionCertificate cert = clique_certificate(g, cl.witness);
    detail::require_valid(claim, g, cert);
    return cert;
  }

  const HoleDecomposition dec = decompose_around_long_hole(g, *hole);
  VertexSet a;
  for (const VertexSet& b : dec.bags.bags) a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  const Subgraph sub = induced_subgraph(g, a);
  BagMap local;
  for (const VertexSet& b : dec.bags.bags) {
    VertexSet lb;
    for (Vertex x : b) lb.push_back(sub.from_parent[x]);
    local.bags.push_back(std::move(lb));
  }
  const CycleInflationResult cyc = cycle_inflation_clique_immersion(sub.graph, local);
  const int chi_a = inflation_chromatic_number({cycle_graph(local.size()), local.sizes()}).colors;
  claim(cyc.certificate.order() >= chi_a, "cycle construction reaches chi(G[A])");
  const ImmersionCertificate trimmed = trim_certificate(cyc.certificate, chi_a);
  ImmersionCertificate cert =
      extend_with_universal(g, lift_certificate(trimmed, sub.to_parent, g), dec.universal);
  detail::require_valid(claim, g, cert);
  return cert;
}

}  // namespace immlab

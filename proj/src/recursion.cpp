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

namespace {

// Graphs on at most four vertices with alpha <= 2 have a clique on half of
// their vertices.
ImmersionCertificate tiny_clique(const Graph& g, const char* where) {
  detail::ClaimChecker claim(g, where);
  CliqueResult cl = max_clique(g);
  const int target = half_up(g.order());
  claim(cl.size >= target, "graph on at most 4 vertices has a clique on ceil(n/2)");
  cl.witness.resize(static_cast<std::size_t>(target));
  return clique_certificate(g, cl.witness);
}

bool dominated_by_edge(const Graph& g, Vertex x, Vertex a, Vertex b) {
  return g.adjacent(x, a) || g.adjacent(x, b);
}

// Solves g - removed recursively and lifts the result back to g.
template <typename Solve>
ImmersionCertificate solve_rest(const Graph& g, const std::vector<Vertex>& removed, Solve solve) {
  const Subgraph rest = delete_vertices(g, removed);
  return lift_certificate(solve(rest.graph), rest.to_parent, g);
}

ImmersionCertificate house_free_rec(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return tiny_clique(g, "house_free_immersion");
  const auto f = find_induced(g, PatternKind::C4);
  if (!f) {
    detail::ClaimChecker claim(g, "house_free_immersion");
    ImmersionCertificate cert = hole_free_immersion(g);
    claim(cert.order() >= half_up(n), "C4-free graph immerses a clique on ceil(n/2)");
    return trim_certificate(cert, half_up(n));
  }
  const std::vector<Vertex>& a = *f;
  detail::ClaimChecker claim(g, "house_free_immersion");
  claim.context()["c4"] = a;
  for (Vertex x = 0; x < n; ++x) {
    if (std::find(a.begin(), a.end(), x) != a.end()) continue;
    bool three = false;
    for (int i = 0; i < 4; ++i) {
      three = three || (g.adjacent(x, a[i]) && g.adjacent(x, a[(i + 1) % 4]) &&
                        g.adjacent(x, a[(i + 2) % 4]));
    }
    claim(three, "vertex " + std::to_string(x) +
                     " is adjacent to three consecutive vertices of the C4 (else a house)");
  }
  const ImmersionCertificate sub = solve_rest(g, a, house_free_rec);
  const ExtensionContext ctx = make_extension_context(g, ExtensionShape::kC4, a, sub);
  return extend_over_dominating_c4(ctx, sub);
}

ImmersionCertificate owh_free_rec(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return tiny_clique(g, "owh_free_immersion");
  const auto p = find_induced(g, PatternKind::P4);
  if (!p) return house_free_rec(g);
  const std::vector<Vertex>& a = *p;
  detail::ClaimChecker claim(g, "owh_free_immersion");
  claim.context()["p4"] = a;

  Vertex bad = -1;
  for (Vertex x = 0; x < n && bad < 0; ++x) {
    if (std::find(a.begin(), a.end(), x) != a.end()) continue;
    for (int i = 0; i < 3; ++i) {
      if (!dominated_by_edge(g, x, a[i], a[i + 1])) {
        bad = x;
        break;
      }
    }
  }
  if (bad < 0) {
    const ImmersionCertificate sub = solve_rest(g, a, owh_free_rec);
    const ExtensionContext ctx = make_extension_context(g, ExtensionShape::kP4, a, sub);
    return extend_over_dominating_p4(ctx, sub);
  }

  // A vertex missed by some edge of the P4 sees exactly a_1 and a_4, giving a
  // C5; any other neighbourhood would complete a one-wall-house.
  claim(g.adjacent(bad, a[0]) && g.adjacent(bad, a[3]) && !g.adjacent(bad, a[1]) &&
            !g.adjacent(bad, a[2]),
        "vertex " + std::to_string(bad) + " missed by a P4 edge closes a C5");
  const std::vector<Vertex> h{a[0], a[1], a[2], a[3], bad};
  claim.context()["c5"] = h;
  for (Vertex x = 0; x < n; ++x) {
    if (std::find(h.begin(), h.end(), x) != h.end()) continue;
    for (int i = 0; i < 5; ++i) {
      claim(dominated_by_edge(g, x, h[i], h[(i + 1) % 5]),
            "vertex " + std::to_string(x) + " is dominated by every C5 edge (else a one-wall-house)");
    }
  }
  const std::vector<Vertex> removed(h.begin(), h.begin() + 4);
  const ImmersionCertificate sub = solve_rest(g, removed, owh_free_rec);
  const ExtensionContext ctx = make_extension_context(g, ExtensionShape::kC5, h, sub);
  return extend_over_dominating_c5(ctx, sub);
}

void require_free(const Graph& g, PatternKind p, const char* where) {
  if (find_induced(g, p)) {
    throw PreconditionError(std::string(where) + ": graph contains an induced " +
                            std::string(pattern_name(p)));
  }
}

}  // namespace

ImmersionCertificate house_free_immersion(const Graph& g) {
  detail::require_alpha_at_most_two(g, "house_free_immersion");
  require_free(g, PatternKind::House, "house_free_immersion");
  ImmersionCertificate cert = house_free_rec(g);
  detail::require_valid(detail::ClaimChecker(g, "house_free_immersion"), g, cert);
  return cert;
}

ImmersionCertificate owh_free_immersion(const Graph& g) {
  detail::require_alpha_at_most_two(g, "owh_free_immersion");
  require_free(g, PatternKind::Owh, "owh_free_immersion");
  ImmersionCertificate cert = owh_free_rec(g);
  detail::require_valid(detail::ClaimChecker(g, "owh_free_immersion"), g, cert);
  return cert;
}

}  // namespace immlab

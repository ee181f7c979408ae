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
#include <array>

#include "construct_internal.hpp"
#include "immlab/construct.hpp"
#include "immlab/oracle.hpp"

namespace immlab {

namespace {

ImmersionCertificate drop_first_vertex(const Graph& g, ImmersionCertificate (*solve)(const Graph&)) {
  const Subgraph rest = delete_vertices(g, std::vector<Vertex>{0});
  return lift_certificate(solve(rest.graph), rest.to_parent, g);
}

ImmersionCertificate k4_free_five(const Graph& g) {
  detail::ClaimChecker claim(g, "k4_free_immersion");
  const auto cert = triangle_immersion_from_cycle(g);
  claim(cert.has_value(), "five-vertex graph with alpha <= 2 has a cycle");
  return *cert;
}

ImmersionCertificate k4_free_six(const Graph& g) { return drop_first_vertex(g, k4_free_five); }

// Tries one labelling m1 m2 m3 / a1 a2 with a1 m1, a2 m2, a2 m3 edges and
// a1 m3, a2 m1 non-edges. Returns the extra route a2 -> m1 if the case
// analysis goes through.
std::optional<std::vector<Vertex>> seven_route(const Graph& g, const std::array<Vertex, 3>& mm,
                                               Vertex a1, Vertex a2,
                                               const std::array<Vertex, 2>& rest) {
  const auto [m1, m2, m3] = mm;
  if (!g.adjacent(a1, m1) || !g.adjacent(a2, m2) || !g.adjacent(a2, m3) || g.adjacent(a1, m3) ||
      g.adjacent(a2, m1)) {
    return std::nullopt;
  }
  for (Vertex ai : rest) {
    if (g.adjacent(ai, a1) && g.adjacent(ai, a2)) return std::vector<Vertex>{a2, ai, a1, m1};
  }
  for (int flip = 0; flip < 2; ++flip) {
    const Vertex a3 = rest[flip];
    const Vertex a4 = rest[1 - flip];
    if (!g.adjacent(a1, a3) || !g.adjacent(a2, a4) || g.adjacent(a1, a4) || g.adjacent(a2, a3)) {
      continue;
    }
    if (!g.adjacent(a1, m2)) return std::nullopt;
    if (g.adjacent(a3, a4)) return std::vector<Vertex>{a2, a4, a3, a1, m1};
    if (g.adjacent(a4, m1)) return std::vector<Vertex>{a2, a4, m1};
    return std::nullopt;
  }
  return std::nullopt;
}

ImmersionCertificate k4_free_seven(const Graph& g) {
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (!g.adjacent(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (!g.adjacent(x, z) || !g.adjacent(y, z)) continue;
        std::vector<Vertex> others;
        for (Vertex v = 0; v < n; ++v) {
          if (v != x && v != y && v != z) others.push_back(v);
        }
        for (std::size_t i = 0; i < others.size(); ++i) {
          for (std::size_t j = 0; j < others.size(); ++j) {
            if (i == j || g.adjacent(others[i], others[j])) continue;
            const Vertex a1 = others[i];
            const Vertex a2 = others[j];
            std::array<Vertex, 2> rest{};
            int r = 0;
            for (Vertex v : others) {
              if (v != a1 && v != a2) rest[r++] = v;
            }
            std::array<Vertex, 3> mm{x, y, z};
            do {
              const auto route = seven_route(g, mm, a1, a2, rest);
              if (!route) continue;
              const auto [m1, m2, m3] = mm;
              ImmersionCertificate cert = make_certificate(
                  g, {a2, m1, m2, m3},
                  {{m1, m2, {m1, m2}}, {m1, m3, {m1, m3}}, {m2, m3, {m2, m3}},
                   {a2, m2, {a2, m2}}, {a2, m3, {a2, m3}}, {a2, m1, *route}});
              if (verify_certificate(g, cert)) return cert;
            } while (std::next_permutation(mm.begin(), mm.end()));
          }
        }
      }
    }
  }
  log_note("k4_free_immersion: seven-vertex case analysis found no labelling; using the oracle");
  detail::ClaimChecker claim(g, "k4_free_immersion");
  OracleBudget budget;
  budget.max_n = 7;
  budget.max_t = 4;
  const auto cert = brute_force_immersion(g, 4, budget);
  claim(cert.has_value(), "seven-vertex K4-free graph with alpha <= 2 immerses K4");
  return *cert;
}

ImmersionCertificate k4_free_eight(const Graph& g) { return drop_first_vertex(g, k4_free_seven); }

}  // namespace

ImmersionCertificate k4_free_immersion(const Graph& g) {
  detail::require_alpha_at_most_two(g, "k4_free_immersion");
  if (find_induced(g, PatternKind::K4)) {
    throw PreconditionError("k4_free_immersion: graph contains K4");
  }
  detail::ClaimChecker claim(g, "k4_free_immersion");
  const int n = g.order();
  claim(n <= 8, "K4-free graph with alpha <= 2 has at most 8 vertices");
  ImmersionCertificate cert;
  switch (n) {
    case 5:
      cert = k4_free_five(g);
      break;
    case 6:
      cert = k4_free_six(g);
      break;
    case 7:
      cert = k4_free_seven(g);
      break;
    case 8:
      cert = k4_free_eight(g);
      break;
    default: {
      CliqueResult cl = max_clique(g);
      claim(cl.size >= half_up(n), "graph on at most 4 vertices has a clique on ceil(n/2)");
      cl.witness.resize(static_cast<std::size_t>(half_up(n)));
      cert = clique_certificate(g, cl.witness);
    }
  }
  detail::require_valid(claim, g, cert);
  claim(cert.order() == half_up(n), "order is ceil(n/2)");
  return cert;
}

K4MinusResult k4minus_free_clique(const Graph& g) {
  detail::require_alpha_at_most_two(g, "k4minus_free_clique");
  if (find_induced(g, PatternKind::K4minus)) {
    throw PreconditionError("k4minus_free_clique: graph contains an induced K4minus");
  }
  detail::ClaimChecker claim(g, "k4minus_free_clique");
  const int n = g.order();
  const int target = half_up(n);
  K4MinusResult out;

  if (n == 5 && find_induced(g, PatternKind::C5)) {
    log_note("k4minus_free_clique: five-cycle has no triangle; returning an immersion instead");
    const auto cert = triangle_immersion_from_cycle(g);
    claim(cert.has_value(), "five-cycle has a cycle");
    out.certificate = *cert;
    detail::require_valid(claim, g, out.certificate);
    return out;
  }
  const VertexSet all = detail::all_vertices(g);
  if (is_clique(g, all)) {
    out.partition = CliquePartition{all, {}};
  } else {
    claim(!find_induced(g, PatternKind::C5), "graph other than C5 is C5-free");
    Vertex x = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (g.degree(v) < g.degree(x)) x = v;
    }
    claim.context()["x"] = x;
    const VertexSet nx = g.neighbors(x);
    VertexSet non_nx;
    for (Vertex v = 0; v < n; ++v) {
      if (v != x && !g.adjacent(x, v)) non_nx.push_back(v);
    }
    if (is_clique(g, nx)) {
      VertexSet first = nx;
      first.push_back(x);
      std::sort(first.begin(), first.end());
      out.partition = CliquePartition{first, non_nx};
    } else {
      // N(x) splits into two cliques: A holds the smallest neighbour.
      VertexSet a;
      VertexSet b;
      for (Vertex v : nx) {
        (v == nx.front() || g.adjacent(v, nx.front()) ? a : b).push_back(v);
      }
      claim(!b.empty() && is_clique(g, a) && is_clique(g, b), "N(x) is two cliques");
      for (Vertex u : a) {
        for (Vertex v : b) claim(!g.adjacent(u, v), "the two cliques of N(x) are anticomplete");
      }
      auto complete_to = [&](const VertexSet& s) {
        for (Vertex u : s) {
          for (Vertex v : non_nx) {
            if (!g.adjacent(u, v)) return false;
          }
        }
        return true;
      };
      if (!complete_to(a)) std::swap(a, b);
      claim(complete_to(a), "one clique of N(x) is complete to the non-neighbours of x");
      VertexSet first = a;
      first.insert(first.end(), non_nx.begin(), non_nx.end());
      std::sort(first.begin(), first.end());
      VertexSet second = b;
      second.push_back(x);
      std::sort(second.begin(), second.end());
      out.partition = CliquePartition{first, second};
    }
  }
  const CliquePartition& part = *out.partition;
  claim(is_clique(g, part.first) && is_clique(g, part.second), "both parts are cliques");
  claim(part.first.size() + part.second.size() == static_cast<std::size_t>(n),
        "parts cover the graph");
  const VertexSet& larger = part.first.size() >= part.second.size() ? part.first : part.second;
  claim(static_cast<int>(larger.size()) >= target, "larger part has ceil(n/2) vertices");
  const VertexSet kept(larger.begin(), larger.begin() + target);
  out.certificate = clique_certificate(g, kept);
  detail::require_valid(claim, g, out.certificate);
  return out;
}

}  // namespace immlab

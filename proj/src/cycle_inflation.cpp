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
#include <numeric>
#include <set>
#include <utility>

#include "construct_internal.hpp"
#include "immlab/construct.hpp"

namespace immlab {

namespace {

LogSink& log_sink() {
  static LogSink sink;
  return sink;
}

VertexSet bag_union(std::initializer_list<const VertexSet*> bags) {
  VertexSet out;
  for (const VertexSet* b : bags) out.insert(out.end(), b->begin(), b->end());
  std::sort(out.begin(), out.end());
  return out;
}

int max_size(const VertexSet& a, const VertexSet& b) {
  return static_cast<int>(std::max(a.size(), b.size()));
}

// Colours 0..|b|-1 in the order the bag lists its vertices.
void color_bag(Coloring& c, const VertexSet& bag, int first) {
  for (std::size_t r = 0; r < bag.size(); ++r) c.color[bag[r]] = first + static_cast<int>(r);
}

CycleInflationResult solve_cycle(const Graph& g, const std::vector<VertexSet>& bags) {
  const int k = static_cast<int>(bags.size());
  detail::ClaimChecker claim(g, "cycle_inflation_clique_immersion");
  CycleInflationResult out;
  out.coloring.color.assign(static_cast<std::size_t>(g.order()), -1);

  if (k == 3) {
    const VertexSet all = bag_union({&bags[0], &bags[1], &bags[2]});
    out.certificate = clique_certificate(g, all);
    int next = 0;
    for (const VertexSet& b : bags) {
      color_bag(out.coloring, b, next);
      next += static_cast<int>(b.size());
    }
    out.coloring.colors = next;
    return out;
  }
  if (k == 4) {
    int best = 0;
    for (int j = 1; j < 4; ++j) {
      if (bags[j].size() + bags[(j + 1) % 4].size() >
          bags[best].size() + bags[(best + 1) % 4].size()) {
        best = j;
      }
    }
    out.certificate = clique_certificate(g, bag_union({&bags[best], &bags[(best + 1) % 4]}));
    const int even = max_size(bags[0], bags[2]);
    color_bag(out.coloring, bags[0], 0);
    color_bag(out.coloring, bags[2], 0);
    color_bag(out.coloring, bags[1], even);
    color_bag(out.coloring, bags[3], even);
    out.coloring.colors = even + max_size(bags[1], bags[3]);
    return out;
  }

  // Rotate so the last two bags carry the largest adjacent sum.
  int best = 0;
  for (int j = 1; j < k; ++j) {
    if (bags[j].size() + bags[(j + 1) % k].size() >
        bags[best].size() + bags[(best + 1) % k].size()) {
      best = j;
    }
  }
  std::vector<VertexSet> nb(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) nb[t] = bags[(best + 2 + t) % k];
  const VertexSet& b1 = nb[0];
  const VertexSet& bkm2 = nb[k - 3];
  const VertexSet& bkm1 = nb[k - 2];
  const VertexSet& bk = nb[k - 1];
  claim(b1.size() <= bkm1.size(), "|B_1| <= |B_{k-1}| after rotation");
  claim(bkm2.size() <= bk.size(), "|B_{k-2}| <= |B_k| after rotation");

  BagMap path;
  if (bkm2.size() <= b1.size()) {
    path.bags = {bkm2, bkm1, bk, b1};
  } else {
    path.bags = {b1, bk, bkm1, bkm2};
  }
  const ImmersionCertificate bridge = path_inflation_clique_immersion(g, path);

  // Smaller cycle: bags B_1..B_{k-2}, with B_1 and B_{k-2} now adjacent.
  InflationSpec spec{cycle_graph(k - 2), {}};
  std::vector<Vertex> to_parent;
  for (int i = 0; i < k - 2; ++i) {
    spec.bag_sizes.push_back(static_cast<int>(nb[i].size()));
    to_parent.insert(to_parent.end(), nb[i].begin(), nb[i].end());
  }
  const Inflation smaller = build_inflation(spec);
  Immersion outer;
  outer.phi = to_parent;
  for (const Edge& e : smaller.graph.edges()) {
    const Vertex a = to_parent[e.u];
    const Vertex b = to_parent[e.v];
    if (g.adjacent(a, b)) {
      outer.routes[e] = {a, b};
    } else {
      const CertPath* p = bridge.path_between(a, b);
      claim(p != nullptr, "bridge route between B_1 and B_{k-2}");
      outer.routes[e] = p->walk;
    }
  }
  const CycleInflationResult inner = solve_cycle(smaller.graph, smaller.bags.bags);
  claim(colors_used(inner.coloring.color) == inner.coloring.colors,
        "recursive colouring uses every colour");

  // Lift the colouring, then fill B_{k-1} and B_k.
  Coloring& c = out.coloring;
  for (Vertex x = 0; x < smaller.graph.order(); ++x) c.color[to_parent[x]] = inner.coloring.color[x];
  const int chi_small = inner.coloring.colors;
  std::set<int> used_b1;
  std::set<int> used_bkm2;
  for (Vertex x : b1) used_b1.insert(c.color[x]);
  for (Vertex x : bkm2) used_bkm2.insert(c.color[x]);
  std::vector<int> pending;
  {
    auto it = used_b1.begin();
    for (Vertex x : bkm1) {
      if (it != used_b1.end()) {
        c.color[x] = *it++;
      } else {
        pending.push_back(x);
      }
    }
    auto jt = used_bkm2.begin();
    for (Vertex x : bk) {
      if (jt != used_bkm2.end()) {
        c.color[x] = *jt++;
      } else {
        pending.push_back(x);
      }
    }
  }
  std::size_t next_pending = 0;
  for (int col = 0; col < chi_small && next_pending < pending.size(); ++col) {
    if (!used_b1.contains(col) && !used_bkm2.contains(col)) c.color[pending[next_pending++]] = col;
  }
  if (next_pending == pending.size()) {
    c.colors = chi_small;
    out.certificate = compose_certificates(g, smaller.graph, outer, inner.certificate);
  } else {
    int col = chi_small;
    while (next_pending < pending.size()) c.color[pending[next_pending++]] = col++;
    c.colors = col;
    claim(c.colors == static_cast<int>(bkm1.size() + bk.size()),
          "fresh colours bring the total to |B_{k-1}| + |B_k|");
    out.certificate = clique_certificate(g, bag_union({&bkm1, &bk}));
  }
  return out;
}

}  // namespace

void set_log_sink(LogSink sink) { log_sink() = std::move(sink); }

void log_note(std::string_view message) {
  if (log_sink()) log_sink()(message);
}

ImmersionCertificate path_inflation_clique_immersion(const Graph& g, const BagMap& m) {
  const int k = m.size();
  if (k < 2 || k % 2 != 0) {
    throw PreconditionError("path_inflation_clique_immersion: need an even number of bags, got " +
                            std::to_string(k));
  }
  if (Verdict v = bag_invariant_check(g, path_graph(k), m, false); !v) {
    throw PreconditionError("path_inflation_clique_immersion: " + v.reason);
  }
  const std::size_t p = m.bags.front().size();
  const std::size_t q = m.bags.back().size();
  for (int i = 0; i < k; ++i) {
    if (m.bags[i].size() < p) {
      throw PreconditionError("path_inflation_clique_immersion: bag " + std::to_string(i + 1) +
                              " is smaller than the first bag");
    }
    if (i % 2 == 1 && m.bags[i].size() < q) {
      throw PreconditionError("path_inflation_clique_immersion: bag " + std::to_string(i + 1) +
                              " is smaller than the last bag");
    }
  }
  const VertexSet& first = m.bags.front();
  const VertexSet& last = m.bags.back();
  VertexSet branch(first);
  branch.insert(branch.end(), last.begin(), last.end());
  std::vector<CertPath> paths;
  for (const VertexSet* bag : {&first, &last}) {
    for (std::size_t a = 0; a < bag->size(); ++a) {
      for (std::size_t b = a + 1; b < bag->size(); ++b) {
        paths.push_back({(*bag)[a], (*bag)[b], {(*bag)[a], (*bag)[b]}});
      }
    }
  }
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t s = 0; s < q; ++s) {
      std::vector<Vertex> walk;
      for (int i = 0; i < k; ++i) walk.push_back(m.bags[i][i % 2 == 0 ? r : s]);
      paths.push_back({walk.front(), walk.back(), std::move(walk)});
    }
  }
  return make_certificate(g, std::move(branch), std::move(paths));
}

CycleInflationResult cycle_inflation_clique_immersion(const Graph& g, const BagMap& m) {
  if (m.size() < 3) {
    throw PreconditionError("cycle_inflation_clique_immersion: need at least 3 bags");
  }
  if (Verdict v = bag_invariant_check(g, cycle_graph(m.size()), m); !v) {
    throw PreconditionError("cycle_inflation_clique_immersion: " + v.reason);
  }
  CycleInflationResult out = solve_cycle(g, m.bags);
  detail::ClaimChecker claim(g, "cycle_inflation_clique_immersion");
  detail::require_valid(claim, g, out.certificate);
  claim(is_proper_coloring(g, out.coloring.color), "returned colouring is proper");
  claim(colors_used(out.coloring.color) == out.coloring.colors, "colour count matches");
  claim(out.certificate.order() == out.coloring.colors, "order equals colours used");
  return out;
}

std::optional<ImmersionCertificate> triangle_immersion_from_cycle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    // Shortest u-v path avoiding the edge uv itself.
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{e.u};
    parent[e.u] = e.u;
    for (std::size_t head = 0; head < queue.size() && parent[e.v] < 0; ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (parent[y] >= 0 || (x == e.u && y == e.v)) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[e.v] < 0) continue;
    std::vector<Vertex> walk{e.v};
    while (walk.back() != e.u) walk.push_back(parent[walk.back()]);
    std::reverse(walk.begin(), walk.end());  // u = p0, p1, ..., pm = v
    const Vertex p0 = walk[0];
    const Vertex p1 = walk[1];
    const Vertex pm = walk.back();
    std::vector<Vertex> around(walk.begin() + 1, walk.end());
    return make_certificate(g, {p0, p1, pm},
                            {{p0, p1, {p0, p1}}, {p0, pm, {p0, pm}}, {p1, pm, around}});
  }
  return std::nullopt;
}

}  // namespace immlab

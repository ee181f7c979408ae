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

// Adding two vertices of a dominating induced C4, C5 or P4 to a clique
// immersion of size ceil((n-4)/2) that lives in the rest of the graph.
//
// Notation follows the usual write-up: a_1..a_4 are h[0..3], N_i / Nbar_i are
// the neighbours / non-neighbours of a_i, M is the sub-certificate's branch
// set and Q the remaining vertices outside the removed ones.

#include <algorithm>
#include <iterator>

#include "construct_internal.hpp"
#include "immlab/construct.hpp"

namespace immlab {

namespace {

using detail::ClaimChecker;

int removed_count(ExtensionShape) { return 4; }

std::vector<Edge> shape_edges(ExtensionShape shape) {
  switch (shape) {
    case ExtensionShape::kC4:
      return {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    case ExtensionShape::kC5:
      return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    case ExtensionShape::kP4:
      return {{0, 1}, {1, 2}, {2, 3}};
  }
  return {};
}

int shape_size(ExtensionShape shape) { return shape == ExtensionShape::kC5 ? 5 : 4; }

const char* shape_name(ExtensionShape shape) {
  switch (shape) {
    case ExtensionShape::kC4:
      return "C4";
    case ExtensionShape::kC5:
      return "C5";
    case ExtensionShape::kP4:
      return "P4";
  }
  return "?";
}

struct Sets {
  const Graph& g;
  Vertex a;

  bool in_n(Vertex x) const { return x != a && g.adjacent(a, x); }
  bool in_nbar(Vertex x) const { return x != a && !g.adjacent(a, x); }

  VertexSet nbar_of(const VertexSet& s) const {
    VertexSet out;
    for (Vertex x : s) {
      if (in_nbar(x)) out.push_back(x);
    }
    return out;
  }
  VertexSet n_of(const VertexSet& s) const {
    VertexSet out;
    for (Vertex x : s) {
      if (in_n(x)) out.push_back(x);
    }
    return out;
  }
  VertexSet nbar_all() const {
    VertexSet out;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (in_nbar(x)) out.push_back(x);
    }
    return out;
  }
};

bool contains(const VertexSet& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); }

VertexSet minus(const VertexSet& s, const VertexSet& drop) {
  VertexSet out;
  std::set_difference(s.begin(), s.end(), drop.begin(), drop.end(), std::back_inserter(out));
  return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ClaimChecker make_checker(const ExtensionContext& ctx, const char* where) {
  ClaimChecker claim(*ctx.host, where);
  claim.context()["h"] = ctx.h;
  claim.context()["m"] = ctx.m;
  claim.context()["q"] = ctx.q;
  return claim;
}

// Returns the whole non-neighbourhood of a_i cut to ceil(n/2) vertices when
// it is a clique of at least that size.
ImmersionCertificate escape_clique(const ClaimChecker& claim, const Graph& g, Vertex a,
                                   int index) {
  VertexSet clique = Sets{g, a}.nbar_all();
  const int target = half_up(g.order());
  claim(is_clique(g, clique), "non-neighbourhood of a_" + std::to_string(index + 1) +
                                  " is a clique");
  claim(static_cast<int>(clique.size()) >= target,
        "non-neighbourhood of a_" + std::to_string(index + 1) + " has at least ceil(n/2) vertices");
  clique.resize(static_cast<std::size_t>(target));
  ImmersionCertificate cert = clique_certificate(g, clique);
  detail::require_valid(claim, g, cert);
  return cert;
}

void check_common(const ExtensionContext& ctx, ExtensionShape shape,
                  const ImmersionCertificate& subcert) {
  if (ctx.host == nullptr || ctx.shape != shape) {
    throw PreconditionError(std::string("extension context is not a ") + shape_name(shape) +
                            " context");
  }
  if (subcert.branch != ctx.m) {
    throw PreconditionError("extension: sub-certificate does not match the context");
  }
}

// Direct edges from the two new branch vertices to M.
void add_direct_edges(const Graph& g, const VertexSet& m, Vertex u, Vertex v,
                      std::vector<CertPath>& paths) {
  for (Vertex x : m) {
    if (g.adjacent(x, u)) paths.push_back({x, u, {x, u}});
    if (g.adjacent(x, v)) paths.push_back({x, v, {x, v}});
  }
}

ImmersionCertificate finish(const ClaimChecker& claim, const Graph& g, VertexSet branch,
                            std::vector<CertPath> paths) {
  ImmersionCertificate cert = make_certificate(g, std::move(branch), std::move(paths));
  detail::require_valid(claim, g, cert);
  claim(cert.order() == half_up(g.order()), "extended order is ceil(n/2)");
  return cert;
}

// Shared body of the C5 and P4 extensions; a5 < 0 for P4.
ImmersionCertificate extend_five_or_path(const ExtensionContext& ctx,
                                         const ImmersionCertificate& subcert, const char* where) {
  const Graph& g = *ctx.host;
  const int n = g.order();
  ClaimChecker claim = make_checker(ctx, where);
  const std::vector<Vertex> a(ctx.h.begin(), ctx.h.begin() + 4);
  const Vertex a5 = ctx.shape == ExtensionShape::kC5 ? ctx.h[4] : -1;
  const VertexSet& m = ctx.m;
  const VertexSet& q = ctx.q;
  const bool a5_in_q = a5 >= 0 && contains(q, a5);
  const bool a5_in_m = a5 >= 0 && contains(m, a5);
  const VertexSet a5_set = a5 >= 0 ? VertexSet{a5} : VertexSet{};
  std::vector<Sets> s;
  for (Vertex x : a) s.push_back(Sets{g, x});

  claim(static_cast<int>(q.size()) == n / 2 - 2, "|Q| = floor(n/2) - 2");

  // |M cap Nbar_i| <= |Q cap N_i| + 1, and without the +1 for i in {1, 4};
  // otherwise Nbar_i is a large clique.
  for (int i = 0; i < 4; ++i) {
    const int slack = (i == 0 || i == 3) ? 0 : 1;
    if (static_cast<int>(s[i].nbar_of(m).size()) > static_cast<int>(s[i].n_of(q).size()) + slack) {
      log_note(std::string(where) + ": non-neighbourhood escape at a_" + std::to_string(i + 1));
      return escape_clique(claim, g, a[i], i);
    }
  }

  // Non-neighbourhoods of distinct a_i meet only in a_5 outside P.
  VertexSet outside = m;
  outside.insert(outside.end(), q.begin(), q.end());
  std::sort(outside.begin(), outside.end());
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (Vertex x : outside) {
        claim(x == a5 || !(s[i].in_nbar(x) && s[j].in_nbar(x)),
              "Nbar_" + std::to_string(i + 1) + " and Nbar_" + std::to_string(j + 1) +
                  " are disjoint outside P");
      }
    }
  }

  int ell = 0;
  auto mbar_wo5 = [&](int i) { return minus(s[i].nbar_of(m), a5_set); };
  for (int i = 1; i < 3; ++i) {
    if (mbar_wo5(i).size() < mbar_wo5(ell).size()) ell = i;
  }
  claim.context()["ell"] = ell + 1;
  const VertexSet s_ell = s[ell].nbar_of(m);
  const VertexSet x4 = s[3].nbar_of(m);
  claim(x4.size() + 3 * mbar_wo5(ell).size() <= m.size(),
        "|M cap Nbar_4| <= |M| - 3|M cap Nbar_ell - a_5|");

  std::vector<int> others;  // {1,2,3} minus ell, as 0-based indices
  for (int i = 0; i < 3; ++i) {
    if (i != ell) others.push_back(i);
  }
  auto pick_middle = [&](Vertex from, Vertex to, const std::vector<int>& choices,
                         const std::string& what) {
    for (int i : choices) {
      if (g.adjacent(a[i], to)) {
        claim(g.adjacent(a[i], from), what + ": start adjacent to the middle vertex");
        return a[i];
      }
    }
    claim.fail(what + ": no middle vertex adjacent to the target");
  };

  // Targets for f: Q cap N_4, preferring Nbar_ell. With ell = 1 the vertex a_5
  // cannot be reached from a_2 or a_3, so it is left out.
  VertexSet preferred;
  VertexSet rest;
  for (Vertex y : s[3].n_of(q)) {
    if (ell == 0 && y == a5) continue;
    (s[ell].in_nbar(y) ? preferred : rest).push_back(y);
  }
  VertexSet targets = preferred;
  targets.insert(targets.end(), rest.begin(), rest.end());

  VertexSet domain = x4;
  Vertex z_prime = -1;
  if (domain.size() > targets.size()) {
    claim(ell == 0 && a5_in_q && domain.size() == targets.size() + 1,
          "injection into Q cap N_4 exists");
    z_prime = domain.front();
    domain.erase(domain.begin());
  }

  VertexSet branch = m;
  branch.push_back(a[ell]);
  branch.push_back(a[3]);
  std::vector<CertPath> paths = subcert.paths;
  add_direct_edges(g, m, a[ell], a[3], paths);

  VertexSet qf;
  for (std::size_t r = 0; r < domain.size(); ++r) {
    const Vertex x = domain[r];
    const Vertex fx = targets[r];
    qf.push_back(fx);
    const Vertex mid = pick_middle(x, fx, others, "f-route");
    paths.push_back({x, a[3], {x, mid, fx, a[3]}});
  }
  std::sort(qf.begin(), qf.end());
  if (z_prime >= 0) {
    claim(g.adjacent(z_prime, a[2]), "z' adjacent to a_3");
    paths.push_back({z_prime, a[3], {z_prime, a[2], a[3]}});
  }

  const VertexSet q_nbar = s[ell].nbar_of(q);
  claim(subset(q_nbar, qf) || subset(qf, q_nbar), "Q cap Nbar_ell and Q_f are nested");
  const int excess = std::max(0, static_cast<int>(qf.size()) - static_cast<int>(q_nbar.size()));
  VertexSet drop;
  std::set_union(qf.begin(), qf.end(), a5_set.begin(), a5_set.end(), std::back_inserter(drop));
  const VertexSet t = minus(s[ell].n_of(q), drop);
  const int qn = static_cast<int>(s[ell].n_of(q).size());
  const int ts = static_cast<int>(t.size());
  const int ss = static_cast<int>(s_ell.size());
  if (ell != 0 || !a5_in_q) {
    claim(ts == qn - excess, "|Q cap N_ell - (Q_f + a_5)| = |Q cap N_ell| - excess");
  } else {
    claim(ts >= qn - excess - 1, "|Q cap N_ell - (Q_f + a_5)| >= |Q cap N_ell| - excess - 1");
  }

  auto route_g = [&](const VertexSet& ys, const std::vector<int>& choices) {
    claim(ts >= static_cast<int>(ys.size()), "injection g exists");
    for (std::size_t r = 0; r < ys.size(); ++r) {
      const Vertex y = ys[r];
      const Vertex gy = t[r];
      const Vertex mid = pick_middle(y, gy, choices, "g-route");
      paths.push_back({y, a[ell], {y, mid, gy, a[ell]}});
    }
  };

  if (ell == 0) {
    if (excess != 0) claim(ts >= 3 * ss - 2, "|T| >= 3|M cap Nbar_1| - 2");
    if (excess == 0 && !a5_in_q) claim(ts >= ss, "|T| >= |M cap Nbar_1|");
    const std::vector<Vertex> via_a5{a[0], a5, a[3]};
    if (ts >= ss) {
      route_g(s_ell, {1, 2});
      if (z_prime >= 0) {
        claim(a5_in_q && !contains(qf, a5), "a_5 free for the a_1-a_4 route");
        paths.push_back({a[0], a[3], via_a5});
      } else {
        paths.push_back({a[0], a[3], {a[0], a[1], a[2], a[3]}});
      }
    } else {
      claim(excess == 0 && a5_in_q && !contains(qf, a5), "delicate subcase: a_5 in Q, not in Q_f");
      claim(ts >= ss - 1, "|T| >= |M cap Nbar_1| - 1");
      const Vertex z = s_ell.front();
      claim(g.adjacent(z, a[1]), "z adjacent to a_2");
      route_g(VertexSet(s_ell.begin() + 1, s_ell.end()), {1, 2});
      paths.push_back({a[0], z, {a[0], a[1], z}});
      paths.push_back({a[0], a[3], via_a5});
    }
  } else {
    if (excess != 0) {
      claim(ts >= 3 * static_cast<int>(mbar_wo5(ell).size()) - 1,
            "|T| >= 3|M cap Nbar_ell - a_5| - 1");
    }
    std::vector<Vertex> to_a4;
    for (int i = ell; i < 4; ++i) to_a4.push_back(a[i]);
    if (ss == 0) {
      paths.push_back({a[ell], a[3], to_a4});
    } else {
      claim(ts >= ss - 1, "|T| >= |M cap Nbar_ell| - 1");
      const Vertex z = a5_in_m && contains(s_ell, a5) ? a5 : s_ell.front();
      claim(g.adjacent(z, a[0]), "z adjacent to a_1");
      VertexSet ys;
      for (Vertex y : s_ell) {
        if (y != z) ys.push_back(y);
      }
      route_g(ys, others);
      std::vector<Vertex> to_z;
      for (int i = ell; i >= 0; --i) to_z.push_back(a[i]);
      to_z.push_back(z);
      paths.push_back({a[ell], z, to_z});
      paths.push_back({a[ell], a[3], to_a4});
    }
  }
  return finish(claim, g, std::move(branch), std::move(paths));
}

}  // namespace

ExtensionContext make_extension_context(const Graph& host, ExtensionShape shape,
                                        std::span<const Vertex> h,
                                        const ImmersionCertificate& subcert) {
  const int size = shape_size(shape);
  const std::string where = std::string("extension over ") + shape_name(shape);
  if (static_cast<int>(h.size()) != size) {
    throw PreconditionError(where + ": expected " + std::to_string(size) + " pattern vertices");
  }
  const VertexSet hs = normalize_vertex_set(host, h);
  const std::vector<Edge> edges = shape_edges(shape);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      const bool want = std::find(edges.begin(), edges.end(), Edge{i, j}) != edges.end();
      if (host.adjacent(h[i], h[j]) != want) {
        throw PreconditionError(where + ": pattern vertices do not induce " + shape_name(shape));
      }
    }
  }
  for (Vertex x = 0; x < host.order(); ++x) {
    if (contains(hs, x)) continue;
    for (const Edge& e : edges) {
      if (!host.adjacent(x, h[e.u]) && !host.adjacent(x, h[e.v])) {
        throw PreconditionError(where + ": edge " + std::to_string(h[e.u]) + "-" +
                                std::to_string(h[e.v]) + " does not dominate vertex " +
                                std::to_string(x));
      }
    }
  }
  if (CertificateVerdict v = verify_certificate(host, subcert); !v) {
    throw PreconditionError(where + ": sub-certificate invalid: " + v.detail);
  }
  VertexSet removed(h.begin(), h.begin() + removed_count(shape));
  std::sort(removed.begin(), removed.end());
  for (const CertPath& p : subcert.paths) {
    for (Vertex x : p.walk) {
      if (contains(removed, x)) {
        throw PreconditionError(where + ": sub-certificate touches a removed vertex");
      }
    }
  }
  if (subcert.order() != half_up(host.order() - 4)) {
    throw PreconditionError(where + ": sub-certificate order " + std::to_string(subcert.order()) +
                            " differs from ceil((n-4)/2)");
  }
  ExtensionContext ctx;
  ctx.host = &host;
  ctx.shape = shape;
  ctx.h.assign(h.begin(), h.end());
  ctx.m = subcert.branch;
  for (Vertex x = 0; x < host.order(); ++x) {
    if (!contains(removed, x) && !contains(ctx.m, x)) ctx.q.push_back(x);
  }
  return ctx;
}

ImmersionCertificate extend_over_dominating_c4(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert) {
  check_common(ctx, ExtensionShape::kC4, subcert);
  const Graph& g = *ctx.host;
  const int n = g.order();
  ClaimChecker claim = make_checker(ctx, "extend_over_dominating_c4");
  const VertexSet& m = ctx.m;
  const VertexSet& q = ctx.q;

  claim(static_cast<int>(q.size()) == n / 2 - 2, "|Q| = floor(n/2) - 2");
  for (int i = 0; i < 4; ++i) {
    const Sets si{g, ctx.h[i]};
    if (si.nbar_of(m).size() > si.n_of(q).size() + 1) {
      log_note("extend_over_dominating_c4: non-neighbourhood escape at a_" + std::to_string(i + 1));
      return escape_clique(claim, g, ctx.h[i], i);
    }
  }
  VertexSet outside = m;
  outside.insert(outside.end(), q.begin(), q.end());
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (Vertex x : outside) {
        claim(g.adjacent(x, ctx.h[i]) || g.adjacent(x, ctx.h[j]),
              "Nbar_" + std::to_string(i + 1) + " and Nbar_" + std::to_string(j + 1) +
                  " are disjoint outside H");
      }
    }
  }

  // Relabel so the minimiser of |M cap Nbar_i| is a_1 and a_4 precedes it.
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (Sets{g, ctx.h[i]}.nbar_of(m).size() < Sets{g, ctx.h[best]}.nbar_of(m).size()) best = i;
  }
  std::vector<Vertex> a(4);
  for (int i = 0; i < 4; ++i) a[i] = ctx.h[(best + i) % 4];
  claim.context()["relabelled"] = a;
  const Sets s1{g, a[0]};
  const Sets s4{g, a[3]};
  const VertexSet x4 = s4.nbar_of(m);
  const VertexSet w1 = s1.nbar_of(m);
  claim(x4.size() + 3 * w1.size() <= m.size(), "|M cap Nbar_4| <= |M| - 3|M cap Nbar_1|");

  VertexSet branch = m;
  branch.push_back(a[0]);
  branch.push_back(a[3]);
  std::vector<CertPath> paths = subcert.paths;
  add_direct_edges(g, m, a[0], a[3], paths);
  paths.push_back({a[0], a[3], {a[0], a[3]}});

  if (x4.empty()) {
    claim(w1.empty(), "M cap Nbar_1 empty when M cap Nbar_4 is");
    return finish(claim, g, std::move(branch), std::move(paths));
  }

  auto middle = [&](Vertex from, Vertex to, const std::string& what) {
    const Vertex mid = g.adjacent(a[1], to) ? a[1] : a[2];
    claim(g.adjacent(mid, to), what + ": a_2 or a_3 adjacent to the target");
    claim(g.adjacent(mid, from), what + ": start adjacent to the middle vertex");
    return mid;
  };

  VertexSet targets;
  VertexSet rest;
  for (Vertex y : s4.n_of(q)) (s1.in_nbar(y) ? targets : rest).push_back(y);
  targets.insert(targets.end(), rest.begin(), rest.end());
  const Vertex z = x4.front();
  claim(x4.size() - 1 <= targets.size(), "injection f exists");
  VertexSet qf;
  for (std::size_t r = 1; r < x4.size(); ++r) {
    const Vertex x = x4[r];
    const Vertex fx = targets[r - 1];
    qf.push_back(fx);
    paths.push_back({x, a[3], {x, middle(x, fx, "f-route"), fx, a[3]}});
  }
  std::sort(qf.begin(), qf.end());
  claim(g.adjacent(z, a[2]), "z adjacent to a_3");
  paths.push_back({z, a[3], {z, a[2], a[3]}});

  const VertexSet q_nbar = s1.nbar_of(q);
  claim(subset(q_nbar, qf) || subset(qf, q_nbar), "Q cap Nbar_1 and Q_f are nested");
  const int excess = std::max(0, static_cast<int>(qf.size()) - static_cast<int>(q_nbar.size()));
  const VertexSet t = minus(s1.n_of(q), qf);
  const int ts = static_cast<int>(t.size());
  const int ws = static_cast<int>(w1.size());
  claim(ts == static_cast<int>(s1.n_of(q).size()) - excess,
        "|Q cap N_1 - Q_f| = |Q cap N_1| - excess");
  if (excess != 0) claim(ts >= 3 * ws, "|Q cap N_1 - Q_f| >= 3|M cap Nbar_1|");
  if (!w1.empty()) {
    claim(ts >= ws - 1, "|Q cap N_1 - Q_f| >= |M cap Nbar_1| - 1");
    const Vertex w = w1.front();
    for (std::size_t r = 1; r < w1.size(); ++r) {
      const Vertex y = w1[r];
      const Vertex gy = t[r - 1];
      paths.push_back({y, a[0], {y, middle(y, gy, "g-route"), gy, a[0]}});
    }
    claim(g.adjacent(w, a[1]), "w adjacent to a_2");
    paths.push_back({w, a[0], {w, a[1], a[0]}});
  }
  return finish(claim, g, std::move(branch), std::move(paths));
}

ImmersionCertificate extend_over_dominating_c5(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert) {
  check_common(ctx, ExtensionShape::kC5, subcert);
  return extend_five_or_path(ctx, subcert, "extend_over_dominating_c5");
}

ImmersionCertificate extend_over_dominating_p4(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert) {
  check_common(ctx, ExtensionShape::kP4, subcert);
  return extend_five_or_path(ctx, subcert, "extend_over_dominating_p4");
}

}  // namespace immlab

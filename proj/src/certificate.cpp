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

#include "immlab/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "immlab/errors.hpp"
#include "immlab/graph_io.hpp"

namespace immlab {

using nlohmann::json;

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

struct Route {
  Vertex a;
  Vertex b;
  std::span<const Vertex> walk;
};

// Shared checker for conditions (I)-(III). `is_branch` marks branch vertices;
// `required` lists the endpoint pairs that must each get exactly one route.
CertificateVerdict check_routes(const Graph& host, const std::vector<char>& is_branch,
                                const std::vector<Route>& routes) {
  std::unordered_set<std::uint64_t> used;
  const auto key = [&](Vertex x, Vertex y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(host.order()) +
           static_cast<std::uint64_t>(y);
  };
  for (const Route& r : routes) {
    const std::string label = pair_text(r.a, r.b);
    for (Vertex x : r.walk) {
      if (!host.contains(x)) {
        return {Condition::kStructure,
                "route " + label + " visits vertex " + std::to_string(x) +
                    " outside the host"};
      }
    }
    if (r.walk.size() < 2 || r.walk.front() != r.a || r.walk.back() != r.b) {
      return {Condition::kRoutes, "route " + label + " does not run between its ends"};
    }
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < r.walk.size(); ++i) {
      if (!seen.insert(r.walk[i]).second) {
        return {Condition::kRoutes, "route " + label + " repeats vertex " +
                                        std::to_string(r.walk[i])};
      }
      if (i > 0 && !host.adjacent(r.walk[i - 1], r.walk[i])) {
        return {Condition::kRoutes, "route " + label + " uses non-edge " +
                                        pair_text(r.walk[i - 1], r.walk[i])};
      }
    }
    for (std::size_t i = 1; i + 1 < r.walk.size(); ++i) {
      if (is_branch[r.walk[i]]) {
        return {Condition::kBranchInterior,
                "branch vertex " + std::to_string(r.walk[i]) +
                    " is interior to route " + label};
      }
    }
    for (std::size_t i = 1; i < r.walk.size(); ++i) {
      if (!used.insert(key(r.walk[i - 1], r.walk[i])).second) {
        return {Condition::kEdgeDisjoint,
                "edge " + pair_text(r.walk[i - 1], r.walk[i]) +
                    " reused by route " + label};
      }
    }
  }
  return {};
}

std::vector<Vertex> orient(const std::vector<Vertex>& walk, Vertex from) {
  if (!walk.empty() && walk.front() != from) {
    return std::vector<Vertex>(walk.rbegin(), walk.rend());
  }
  return walk;
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::kNone: return "none";
    case Condition::kHostMismatch: return "host-mismatch";
    case Condition::kStructure: return "structure";
    case Condition::kRoutes: return "I";
    case Condition::kEdgeDisjoint: return "II";
    case Condition::kBranchInterior: return "III";
  }
  return "unknown";
}

const CertPath* ImmersionCertificate::path_between(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(paths.begin(), paths.end(), std::pair{a, b},
                             [](const CertPath& p, const std::pair<Vertex, Vertex>& k) {
                               return std::pair{p.u, p.v} < k;
                             });
  if (it != paths.end() && it->u == a && it->v == b) return &*it;
  for (const CertPath& p : paths) {
    if (std::min(p.u, p.v) == a && std::max(p.u, p.v) == b) return &p;
  }
  return nullptr;
}

CertificateVerdict verify_certificate(const Graph& g, const ImmersionCertificate& c) {
  if (c.host_sha256 != graph_sha256(g)) {
    return {Condition::kHostMismatch, "certificate is bound to a different graph"};
  }
  std::vector<char> is_branch(static_cast<std::size_t>(g.order()), 0);
  for (Vertex b : c.branch) {
    if (!g.contains(b)) {
      return {Condition::kStructure,
              "branch vertex " + std::to_string(b) + " outside the host"};
    }
    if (is_branch[b]) {
      return {Condition::kStructure,
              "branch vertex " + std::to_string(b) + " listed twice"};
    }
    is_branch[b] = 1;
  }
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::vector<Route> routes;
  for (const CertPath& p : c.paths) {
    if (!g.contains(p.u) || !g.contains(p.v) || !is_branch[p.u] || !is_branch[p.v] ||
        p.u == p.v) {
      return {Condition::kStructure,
              "route label " + pair_text(p.u, p.v) + " is not a branch pair"};
    }
    if (!pairs.insert({std::min(p.u, p.v), std::max(p.u, p.v)}).second) {
      return {Condition::kStructure, "pair " + pair_text(p.u, p.v) + " routed twice"};
    }
    routes.push_back({p.u, p.v, p.walk});
  }
  const std::size_t t = c.branch.size();
  if (pairs.size() != t * (t - (t > 0 ? 1 : 0)) / 2) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        const Vertex a = std::min(c.branch[i], c.branch[j]);
        const Vertex b = std::max(c.branch[i], c.branch[j]);
        if (!pairs.contains({a, b})) {
          return {Condition::kRoutes, "branch pair " + pair_text(a, b) + " has no route"};
        }
      }
    }
  }
  return check_routes(g, is_branch, routes);
}

CertificateVerdict verify_immersion(const Graph& host, const Graph& pattern,
                                    const Immersion& imm) {
  if (static_cast<int>(imm.phi.size()) != pattern.order()) {
    return {Condition::kStructure, "phi does not cover the pattern"};
  }
  std::vector<char> is_branch(static_cast<std::size_t>(host.order()), 0);
  for (Vertex x : imm.phi) {
    if (!host.contains(x) || is_branch[x]) {
      return {Condition::kStructure, "phi is not an injection into the host"};
    }
    is_branch[x] = 1;
  }
  std::vector<Route> routes;
  for (const Edge& e : pattern.edges()) {
    auto it = imm.routes.find(e);
    if (it == imm.routes.end()) {
      return {Condition::kRoutes, "pattern edge " + pair_text(e.u, e.v) + " has no route"};
    }
    routes.push_back({imm.phi[e.u], imm.phi[e.v], it->second});
  }
  if (imm.routes.size() != pattern.size()) {
    return {Condition::kStructure, "routes given for non-edges of the pattern"};
  }
  return check_routes(host, is_branch, routes);
}

ImmersionCertificate make_certificate(const Graph& g, VertexSet branch,
                                      std::vector<CertPath> paths) {
  std::sort(branch.begin(), branch.end());
  for (CertPath& p : paths) {
    if (p.u > p.v) {
      std::swap(p.u, p.v);
      std::reverse(p.walk.begin(), p.walk.end());
    }
  }
  std::sort(paths.begin(), paths.end(), [](const CertPath& a, const CertPath& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  return {graph_sha256(g), std::move(branch), std::move(paths)};
}

ImmersionCertificate clique_certificate(const Graph& g, std::span<const Vertex> clique) {
  VertexSet branch = normalize_vertex_set(g, clique);
  std::vector<CertPath> paths;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    for (std::size_t j = i + 1; j < branch.size(); ++j) {
      if (!g.adjacent(branch[i], branch[j])) {
        throw PreconditionError("clique_certificate: vertices " +
                                pair_text(branch[i], branch[j]) + " are not adjacent");
      }
      paths.push_back({branch[i], branch[j], {branch[i], branch[j]}});
    }
  }
  return make_certificate(g, std::move(branch), std::move(paths));
}

ImmersionCertificate lift_certificate(const ImmersionCertificate& c,
                                      std::span<const Vertex> to_parent,
                                      const Graph& parent) {
  const auto map = [&](Vertex x) {
    if (x < 0 || static_cast<std::size_t>(x) >= to_parent.size()) {
      throw PreconditionError("lift_certificate: vertex outside the id map");
    }
    return to_parent[x];
  };
  VertexSet branch;
  for (Vertex b : c.branch) branch.push_back(map(b));
  std::vector<CertPath> paths;
  for (const CertPath& p : c.paths) {
    CertPath q{map(p.u), map(p.v), {}};
    for (Vertex x : p.walk) q.walk.push_back(map(x));
    paths.push_back(std::move(q));
  }
  return make_certificate(parent, std::move(branch), std::move(paths));
}

std::vector<Vertex> shortcut_walk(std::span<const Vertex> walk) {
  std::vector<Vertex> out;
  for (Vertex x : walk) {
    auto it = std::find(out.begin(), out.end(), x);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(x);
    }
  }
  return out;
}

ImmersionCertificate compose_certificates(const Graph& g, const Graph& pattern,
                                          const Immersion& outer,
                                          const ImmersionCertificate& inner) {
  if (inner.host_sha256 != graph_sha256(pattern)) {
    throw PreconditionError("compose_certificates: inner certificate is not bound to the pattern");
  }
  if (static_cast<int>(outer.phi.size()) != pattern.order()) {
    throw PreconditionError("compose_certificates: outer immersion does not cover the pattern");
  }
  const auto route = [&](Vertex a, Vertex b) {
    auto it = outer.routes.find(Edge{a, b}.canonical());
    if (it == outer.routes.end()) {
      throw PreconditionError("compose_certificates: outer immersion lacks pattern edge " +
                              pair_text(a, b));
    }
    return orient(it->second, outer.phi[a]);
  };
  VertexSet branch;
  for (Vertex b : inner.branch) branch.push_back(outer.phi.at(static_cast<std::size_t>(b)));
  std::vector<CertPath> paths;
  for (const CertPath& p : inner.paths) {
    std::vector<Vertex> walk{outer.phi[p.walk.front()]};
    for (std::size_t i = 1; i < p.walk.size(); ++i) {
      const std::vector<Vertex> step = route(p.walk[i - 1], p.walk[i]);
      walk.insert(walk.end(), step.begin() + 1, step.end());
    }
    paths.push_back({outer.phi[p.u], outer.phi[p.v], shortcut_walk(walk)});
  }
  return make_certificate(g, std::move(branch), std::move(paths));
}

ImmersionCertificate trim_certificate(const ImmersionCertificate& c, int target) {
  if (target < 0 || target > c.order()) {
    throw PreconditionError("trim_certificate: target " + std::to_string(target) +
                            " outside [0, " + std::to_string(c.order()) + "]");
  }
  VertexSet keep(c.branch.begin(), c.branch.end());
  std::sort(keep.begin(), keep.end());
  keep.resize(static_cast<std::size_t>(target));
  ImmersionCertificate out{c.host_sha256, keep, {}};
  for (const CertPath& p : c.paths) {
    if (std::binary_search(keep.begin(), keep.end(), p.u) &&
        std::binary_search(keep.begin(), keep.end(), p.v)) {
      out.paths.push_back(p);
    }
  }
  return out;
}

ImmersionCertificate extend_with_universal(const Graph& g, const ImmersionCertificate& c,
                                           std::span<const Vertex> universal) {
  const VertexSet extra = normalize_vertex_set(g, universal);
  std::set<Vertex> interior;
  for (const CertPath& p : c.paths) {
    for (std::size_t i = 1; i + 1 < p.walk.size(); ++i) interior.insert(p.walk[i]);
  }
  for (Vertex u : extra) {
    if (g.degree(u) != g.order() - 1) {
      throw PreconditionError("extend_with_universal: vertex " + std::to_string(u) +
                              " is not adjacent to every other vertex");
    }
    if (std::find(c.branch.begin(), c.branch.end(), u) != c.branch.end()) {
      throw PreconditionError("extend_with_universal: vertex " + std::to_string(u) +
                              " is already a branch vertex");
    }
    if (interior.contains(u)) {
      throw PreconditionError("extend_with_universal: vertex " + std::to_string(u) +
                              " lies inside an existing route");
    }
  }
  VertexSet branch = c.branch;
  std::vector<CertPath> paths = c.paths;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (Vertex b : branch) paths.push_back({extra[i], b, {extra[i], b}});
    branch.push_back(extra[i]);
  }
  return make_certificate(g, std::move(branch), std::move(paths));
}

json certificate_to_json(const ImmersionCertificate& c) {
  json paths = json::array();
  for (const CertPath& p : c.paths) {
    paths.push_back({{"u", p.u}, {"v", p.v}, {"walk", p.walk}});
  }
  return json{{"format", kCertificateFormat},
              {"graph_sha256", c.host_sha256},
              {"order", c.order()},
              {"branch", c.branch},
              {"paths", paths}};
}

ImmersionCertificate certificate_from_json(const json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != kCertificateFormat) {
      throw PreconditionError("certificate JSON must carry format \"" +
                              std::string(kCertificateFormat) + "\"");
    }
    ImmersionCertificate c;
    c.host_sha256 = j.at("graph_sha256").get<std::string>();
    c.branch = j.at("branch").get<VertexSet>();
    for (const auto& p : j.at("paths")) {
      c.paths.push_back({p.at("u").get<Vertex>(), p.at("v").get<Vertex>(),
                         p.at("walk").get<std::vector<Vertex>>()});
    }
    if (j.at("order").get<int>() != c.order()) {
      throw PreconditionError("certificate order field disagrees with its branch list");
    }
    return c;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("malformed certificate JSON: ") + ex.what());
  }
}

}  // namespace immlab

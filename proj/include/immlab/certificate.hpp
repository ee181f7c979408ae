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

#ifndef IMMLAB_CERTIFICATE_HPP
#define IMMLAB_CERTIFICATE_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "immlab/graph.hpp"

namespace immlab {

inline constexpr std::string_view kCertificateFormat = "immlab-cert-v1";

/// A route in the host from `u` to `v`; walk.front() == u, walk.back() == v.
struct CertPath {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> walk;

  friend bool operator==(const CertPath&, const CertPath&) = default;
};

/// Witness that the host immerses the complete graph on |branch| vertices:
/// one route per unordered branch pair, routes pairwise edge-disjoint, and no
/// branch vertex strictly inside any route.
///
/// Normal form (produced by make_certificate): branch ascending, each path
/// with u < v, paths sorted by (u, v).
struct ImmersionCertificate {
  std::string host_sha256;
  VertexSet branch;
  std::vector<CertPath> paths;

  int order() const { return static_cast<int>(branch.size()); }
  /// Route between two branch vertices (either orientation); nullptr if absent.
  const CertPath* path_between(Vertex a, Vertex b) const;

  friend bool operator==(const ImmersionCertificate&,
                         const ImmersionCertificate&) = default;
};

/// Which requirement a certificate failed.
enum class Condition {
  kNone,
  kHostMismatch,  // hash does not match the graph it is checked against
  kStructure,     // out-of-range ids, repeated branch vertices, bad pair labels
  kRoutes,        // (I) every branch pair has a host path between its ends
  kEdgeDisjoint,  // (II) routes share no edge
  kBranchInterior // (III) no branch vertex inside a route
};

std::string_view condition_name(Condition c);

struct CertificateVerdict {
  Condition violated = Condition::kNone;
  std::string detail;

  bool accepted() const { return violated == Condition::kNone; }
  explicit operator bool() const { return accepted(); }
};

/// Full check against g, including the host hash.
CertificateVerdict verify_certificate(const Graph& g, const ImmersionCertificate& c);

/// Builds a normalised certificate bound to g. Paths may be given in either
/// orientation and any order; missing or extra pairs are not repaired.
ImmersionCertificate make_certificate(const Graph& g, VertexSet branch,
                                      std::vector<CertPath> paths);

/// Direct-edge certificate for a clique of g.
ImmersionCertificate clique_certificate(const Graph& g, std::span<const Vertex> clique);

/// Maps every vertex through to_parent and rebinds to the parent graph.
ImmersionCertificate lift_certificate(const ImmersionCertificate& c,
                                      std::span<const Vertex> to_parent,
                                      const Graph& parent);

/// Immersion of an arbitrary pattern graph: phi maps pattern vertices to
/// host vertices and routes[{a,b}] (a < b, a pattern edge) runs from phi[a]
/// to phi[b].
struct Immersion {
  std::vector<Vertex> phi;
  std::map<Edge, std::vector<Vertex>> routes;
};

/// Conditions (I)-(III) for a general pattern.
CertificateVerdict verify_immersion(const Graph& host, const Graph& pattern,
                                    const Immersion& imm);

/// Given outer (pattern -> g) and inner (K_t -> pattern), produces K_t -> g.
/// Each inner route is expanded edge by edge into outer routes and the
/// resulting walk is shortcut at repeated vertices. Throws PreconditionError
/// if inner is not bound to `pattern`.
ImmersionCertificate compose_certificates(const Graph& g, const Graph& pattern,
                                          const Immersion& outer,
                                          const ImmersionCertificate& inner);

/// Keeps the `target` smallest branch vertices and the routes among them.
ImmersionCertificate trim_certificate(const ImmersionCertificate& c, int target);

/// Adds vertices adjacent to everything else in g as new branch vertices,
/// joined to every other branch vertex by direct edges.
ImmersionCertificate extend_with_universal(const Graph& g, const ImmersionCertificate& c,
                                           std::span<const Vertex> universal);

/// Removes closed sub-walks: whenever a vertex reappears, the segment since
/// its first occurrence is cut out.
std::vector<Vertex> shortcut_walk(std::span<const Vertex> walk);

nlohmann::json certificate_to_json(const ImmersionCertificate& c);
ImmersionCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace immlab

#endif  // IMMLAB_CERTIFICATE_HPP

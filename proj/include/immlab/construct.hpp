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

#ifndef IMMLAB_CONSTRUCT_HPP
#define IMMLAB_CONSTRUCT_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "immlab/analysis.hpp"
#include "immlab/certificate.hpp"
#include "immlab/errors.hpp"
#include "immlab/graph.hpp"
#include "immlab/inflation.hpp"
#include "immlab/pattern.hpp"

namespace immlab {

/// ceil(n / 2), the target order for graphs with independence number <= 2.
constexpr int half_up(int n) { return (n + 1) / 2; }

/// Receives non-fatal notes from the constructions (fallbacks taken and the
/// like). The default sink discards them.
using LogSink = std::function<void(std::string_view)>;
void set_log_sink(LogSink sink);
void log_note(std::string_view message);

// ---------------------------------------------------------------------------
// Inflations

/// Lemma-style path packing on an inflated path with an even number of bags.
/// Requires |B_1| <= |B_i| for all i and |B_last| <= |B_j| for every
/// even-numbered bag j (1-based). Branch set is B_1 + B_last; the route from
/// the r-th vertex of B_1 to the s-th vertex of B_last alternates through the
/// r-th vertex of every odd bag and the s-th vertex of every even bag.
ImmersionCertificate path_inflation_clique_immersion(const Graph& g, const BagMap& m);

struct CycleInflationResult {
  ImmersionCertificate certificate;
  /// Proper colouring of g whose colour count equals the certificate order.
  Coloring coloring;
};

/// Clique immersion in an inflated cycle (at least 3 bags, given in cyclic
/// order), built by peeling two bags at a time.
CycleInflationResult cycle_inflation_clique_immersion(const Graph& g, const BagMap& m);

/// Split of a graph around an induced cycle of length 2*alpha+1.
struct HoleDecomposition {
  /// bags[i] = {hole[i+1]} + vertices adjacent to exactly hole[i..i+2].
  BagMap bags;
  /// Vertices adjacent to the whole hole; each is adjacent to everything.
  VertexSet universal;
};

/// Throws ClaimViolation if a vertex fits neither category or the bags do
/// not form an inflated cycle.
HoleDecomposition decompose_around_long_hole(const Graph& g, const HoleReport& hole);

/// For graphs with no hole of length 4..2*alpha. Certificate order equals
/// the chromatic number (exact, via the inflation colouring solver).
ImmersionCertificate hole_free_immersion(const Graph& g);

// ---------------------------------------------------------------------------
// Extensions over a dominating induced C4 / C5 / P4

enum class ExtensionShape { kC4, kC5, kP4 };

/// Working sets for adding two vertices of h to an immersion that lives in
/// the rest of the graph. h lists a_1..a_4 (and a_5 for C5) along the
/// pattern. For C5 only a_1..a_4 are removed, so a_5 may sit in M or Q.
struct ExtensionContext {
  const Graph* host = nullptr;
  ExtensionShape shape = ExtensionShape::kC4;
  std::vector<Vertex> h;
  /// Branch vertices of the sub-certificate.
  VertexSet m;
  /// Remaining vertices outside the removed ones and outside M.
  VertexSet q;
};

/// Checks the shape of h, domination by every h-edge and the size of the
/// sub-certificate (exactly ceil((n-4)/2)). `subcert` must be bound to host.
ExtensionContext make_extension_context(const Graph& host, ExtensionShape shape,
                                        std::span<const Vertex> h,
                                        const ImmersionCertificate& subcert);

ImmersionCertificate extend_over_dominating_c4(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert);
ImmersionCertificate extend_over_dominating_c5(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert);
ImmersionCertificate extend_over_dominating_p4(const ExtensionContext& ctx,
                                               const ImmersionCertificate& subcert);

// ---------------------------------------------------------------------------
// Recursions and small cases (all outputs have order exactly ceil(n/2))

ImmersionCertificate house_free_immersion(const Graph& g);
ImmersionCertificate owh_free_immersion(const Graph& g);
ImmersionCertificate k4_free_immersion(const Graph& g);

struct CliquePartition {
  VertexSet first;
  VertexSet second;
};

struct K4MinusResult {
  ImmersionCertificate certificate;
  /// Absent only for the five-cycle, which has no triangle.
  std::optional<CliquePartition> partition;
};

K4MinusResult k4minus_free_clique(const Graph& g);

/// Dispatch by excluded 4-vertex pattern.
ImmersionCertificate vergara_solve(const Graph& g, PatternKind h);

/// K3 immersion from any cycle of g: three consecutive cycle vertices, the
/// third routed back around the cycle. nullopt when g is a forest.
std::optional<ImmersionCertificate> triangle_immersion_from_cycle(const Graph& g);

}  // namespace immlab

#endif  // IMMLAB_CONSTRUCT_HPP

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
#include <string>

#include "construct_internal.hpp"
#include "immlab/construct.hpp"

namespace immlab {

ImmersionCertificate vergara_solve(const Graph& g, PatternKind h) {
  const auto seven = four_vertex_alpha2_patterns();
  if (std::find(seven.begin(), seven.end(), h) == seven.end()) {
    throw PreconditionError("vergara_solve: pattern " + std::string(pattern_name(h)) +
                            " is not a 4-vertex graph with independence number <= 2");
  }
  detail::require_alpha_at_most_two(g, "vergara_solve");
  if (find_induced(g, h)) {
    throw PreconditionError("vergara_solve: graph contains an induced " +
                            std::string(pattern_name(h)));
  }
  const int target = half_up(g.order());
  ImmersionCertificate cert;
  switch (h) {
    case PatternKind::K4:
      cert = k4_free_immersion(g);
      break;
    case PatternKind::K4minus:
      cert = k4minus_free_clique(g).certificate;
      break;
    case PatternKind::C4:
      cert = hole_free_immersion(g);
      break;
    case PatternKind::P4:
    case PatternKind::Paw:
      cert = house_free_immersion(g);
      break;
    default:
      cert = owh_free_immersion(g);
      break;
  }
  detail::ClaimChecker claim(g, "vergara_solve");
  claim(cert.order() >= target, "certificate reaches ceil(n/2)");
  cert = trim_certificate(cert, target);
  detail::require_valid(claim, g, cert);
  return cert;
}

}  // namespace immlab

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

#ifndef IMMLAB_SRC_CONSTRUCT_INTERNAL_HPP
#define IMMLAB_SRC_CONSTRUCT_INTERNAL_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "immlab/certificate.hpp"
#include "immlab/errors.hpp"
#include "immlab/graph.hpp"
#include "immlab/graph_io.hpp"

namespace immlab::detail {

/// Raises ClaimViolation for `g` with extra context attached.
class ClaimChecker {
 public:
  ClaimChecker(const Graph& g, std::string_view where) : g_(g), where_(where) {}

  nlohmann::json& context() { return context_; }

  void operator()(bool ok, std::string_view what) const {
    if (!ok) fail(what);
  }

  [[noreturn]] void fail(std::string_view what) const {
    nlohmann::json dump{{"where", where_},
                        {"claim", what},
                        {"graph", graph_to_json(g_)},
                        {"context", context_}};
    throw ClaimViolation(where_ + ": " + std::string(what), dump.dump());
  }

 private:
  const Graph& g_;
  std::string where_;
  nlohmann::json context_ = nlohmann::json::object();
};

/// Constructions must emit certificates the verifier accepts; anything else
/// is reported as a failed claim.
inline void require_valid(const ClaimChecker& claim, const Graph& g,
                          const ImmersionCertificate& c) {
  const CertificateVerdict v = verify_certificate(g, c);
  if (!v.accepted()) {
    claim.fail("emitted certificate rejected (" + std::string(condition_name(v.violated)) +
               "): " + v.detail);
  }
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return all;
}

/// alpha(g) <= 2, i.e. the complement has no triangle. Throws
/// PreconditionError otherwise.
inline void require_alpha_at_most_two(const Graph& g, std::string_view where) {
  const Graph c = complement(g);
  for (Vertex u = 0; u < c.order(); ++u) {
    const auto ru = c.row(u);
    for (Vertex v : c.neighbors(u)) {
      if (v < u) continue;
      const auto rv = c.row(v);
      for (std::size_t w = 0; w < c.words(); ++w) {
        if (ru[w] & rv[w]) {
          throw PreconditionError(std::string(where) +
                                  ": independence number exceeds 2");
        }
      }
    }
  }
}

}  // namespace immlab::detail

#endif  // IMMLAB_SRC_CONSTRUCT_INTERNAL_HPP

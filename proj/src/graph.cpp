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

#include "immlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "immlab/errors.hpp"

namespace immlab {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) +
                            " outside [0, " +
                            std::to_string(Graph::kMaxVertices) + "]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  *this = b.build();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::degree(Vertex v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::set(Vertex u, Vertex v, bool on) {
  if (!g_.contains(u) || !g_.contains(v)) {
    throw PreconditionError("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} outside vertex range 0.." +
                            std::to_string(g_.n_ - 1));
  }
  if (u == v) {
    throw PreconditionError("self-loop at vertex " + std::to_string(u));
  }
  if (g_.adjacent(u, v) == on) return;
  auto flip = [&](Vertex a, Vertex b) {
    g_.rows_[static_cast<std::size_t>(a) * g_.words_ + (b >> 6)] ^=
        std::uint64_t{1} << (b & 63);
  };
  flip(u, v);
  flip(v, u);
  if (on) {
    ++g_.m_;
  } else {
    --g_.m_;
  }
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  set(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  set(u, v, false);
  return *this;
}

GraphBuilder& GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  set(u, v, !has_edge(u, v));
  return *this;
}

VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!g.contains(out[i])) {
      throw PreconditionError("vertex " + std::to_string(out[i]) +
                              " outside range 0.." +
                              std::to_string(g.order() - 1));
    }
    if (i > 0 && out[i] == out[i - 1]) {
      throw PreconditionError("vertex " + std::to_string(out[i]) +
                              " listed twice");
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph sub;
  sub.to_parent = normalize_vertex_set(g, keep);
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  const int k = static_cast<int>(sub.to_parent.size());
  for (int i = 0; i < k; ++i) sub.from_parent[sub.to_parent[i]] = i;
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(sub.to_parent[i], sub.to_parent[j])) b.add_edge(i, j);
    }
  }
  sub.graph = b.build();
  return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> drop) {
  const VertexSet gone = normalize_vertex_set(g, drop);
  VertexSet keep;
  keep.reserve(static_cast<std::size_t>(g.order()) - gone.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool dominates(const Graph& g, std::span<const Vertex> dominators,
               std::span<const Vertex> target) {
  for (Vertex t : target) {
    bool hit = false;
    for (Vertex d : dominators) {
      if (d == t || g.adjacent(d, t)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(na + e.u, na + e.v);
  for (Vertex u = 0; u < na; ++u) {
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, na + v);
  }
  return out.build();
}

}  // namespace immlab

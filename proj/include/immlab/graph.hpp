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

#ifndef IMMLAB_GRAPH_HPP
#define IMMLAB_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace immlab {

using Vertex = int;

/// A set of vertex ids. Operations that take one treat it as a set; the ones
/// that return one return it sorted ascending.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with u < v.
  Edge canonical() const { return u < v ? *this : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
/// Immutable once built; use GraphBuilder to assemble one.
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws PreconditionError on self-loops or out-of-range ids. Duplicate
  /// edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  int degree(Vertex v) const noexcept;
  VertexSet neighbors(Vertex v) const;
  /// Raw adjacency row of v: bit w of word w/64.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return g_.n_; }
  bool has_edge(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  GraphBuilder& toggle_edge(Vertex u, Vertex v);
  /// Snapshot of the current state.
  const Graph& view() const noexcept { return g_; }
  Graph build() const { return g_; }

 private:
  void set(Vertex u, Vertex v, bool on);
  Graph g_;
};

/// Result of cutting a graph down to a vertex subset. New ids follow the
/// ascending order of the kept parent ids.
struct Subgraph {
  Graph graph;
  /// to_parent[new id] = parent id.
  std::vector<Vertex> to_parent;
  /// Parent id -> new id, -1 for dropped vertices.
  std::vector<Vertex> from_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> drop);
Graph complement(const Graph& g);

/// Throws PreconditionError unless every id is in range and none repeats.
VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> s);

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_independent(const Graph& g, std::span<const Vertex> s);
/// Every vertex of `target` has a neighbour in `dominators` (or lies in it).
bool dominates(const Graph& g, std::span<const Vertex> dominators,
               std::span<const Vertex> target);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Disjoint union followed by all cross edges.
Graph join(const Graph& a, const Graph& b);

}  // namespace immlab

#endif  // IMMLAB_GRAPH_HPP

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

#include "immlab/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "immlab/errors.hpp"

namespace immlab {

namespace {

// Fixed 128-bit set for the exact clique search.
struct Bits {
  std::array<std::uint64_t, 2> w{};

  bool empty() const { return (w[0] | w[1]) == 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  int first() const {
    return w[0] != 0 ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]);
  }
  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits minus(const Bits& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) {
      auto r = g.row(v);
      for (std::size_t i = 0; i < r.size(); ++i) adj_[v].w[i] = r[i];
    }
  }

  VertexSet run(int n) {
    Bits all;
    for (int v = 0; v < n; ++v) all.set(v);
    std::vector<int> current;
    if (n > 0) expand(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy colouring of the candidate set bounds every branch; vertices are
  // tried in reverse colour order and cut once the bound cannot beat best_.
  void expand(Bits candidates, std::vector<int>& current) {
    std::vector<int> order;
    std::vector<int> bound;
    order.reserve(static_cast<std::size_t>(candidates.count()));
    bound.reserve(order.capacity());
    Bits uncolored = candidates;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      Bits q = uncolored;
      while (!q.empty()) {
        const int v = q.first();
        q.reset(v);
        q = q.minus(adj_[v]);
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <=
          static_cast<int>(best_.size())) {
        return;
      }
      const int v = order[i];
      current.push_back(v);
      const Bits next = candidates & adj_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bits> adj_;
  std::vector<int> best_;
};

void require_clique_limit(const Graph& g, const char* what) {
  if (g.order() > kExactCliqueLimit) {
    throw PreconditionError(std::string(what) + ": n = " +
                            std::to_string(g.order()) + " exceeds exact limit " +
                            std::to_string(kExactCliqueLimit));
  }
}

// DSATUR branch and bound. Colour sets per vertex are tracked with per-colour
// neighbour counts so that assignments can be undone.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int lower) : g_(g), n_(g.order()), lower_(lower) {
    color_.assign(static_cast<std::size_t>(n_), -1);
    count_.assign(static_cast<std::size_t>(n_) * kColoringHardLimit, 0);
    mask_.assign(static_cast<std::size_t>(n_), 0);
    neighbors_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) neighbors_[v] = g.neighbors(v);
  }

  Coloring run(const VertexSet& clique) {
    greedy_upper_bound();
    if (best_colors_ > lower_) {
      // Pin a maximum clique to distinct colours; every optimal colouring can
      // be renamed to agree with it.
      int k = 0;
      for (Vertex v : clique) assign(v, k++);
      search(static_cast<int>(clique.size()), k);
    }
    return {best_colors_, best_};
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : neighbors_[v]) {
      if (count_[idx(w, c)]++ == 0) mask_[w] |= std::uint64_t{1} << c;
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : neighbors_[v]) {
      if (--count_[idx(w, c)] == 0) mask_[w] &= ~(std::uint64_t{1} << c);
    }
  }

  std::size_t idx(Vertex v, int c) const {
    return static_cast<std::size_t>(v) * kColoringHardLimit + static_cast<std::size_t>(c);
  }

  Vertex pick() const {
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(mask_[v]);
      int deg = 0;
      if (sat >= best_sat) {
        for (Vertex w : neighbors_[v]) deg += color_[w] < 0 ? 1 : 0;
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return pick;
  }

  void greedy_upper_bound() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = pick();
      int c = 0;
      while ((mask_[v] >> c) & 1U) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = color_;
    best_colors_ = used;
    for (Vertex v = 0; v < n_; ++v) unassign(v);
  }

  // Returns true once an optimal colouring (matching the lower bound) is found.
  bool search(int colored, int used) {
    if (colored == n_) {
      if (used < best_colors_) {
        best_colors_ = used;
        best_ = color_;
      }
      return best_colors_ <= lower_;
    }
    if (used >= best_colors_) return false;
    const Vertex v = pick();
    for (int c = 0; c < used; ++c) {
      if ((mask_[v] >> c) & 1U) continue;
      assign(v, c);
      const bool done = search(colored + 1, used);
      unassign(v);
      if (done) return true;
    }
    if (used + 1 < best_colors_) {
      assign(v, used);
      const bool done = search(colored + 1, used + 1);
      unassign(v);
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int lower_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<std::uint64_t> mask_;
  std::vector<VertexSet> neighbors_;
  std::vector<int> best_;
  int best_colors_ = 0;
};

bool extend_embedding(const Graph& g, const Graph& p, std::vector<Vertex>& image,
                      std::vector<char>& used) {
  const int i = static_cast<int>(image.size());
  if (i == p.order()) return true;
  const int need = p.degree(i);
  for (Vertex h = 0; h < g.order(); ++h) {
    if (used[h] || g.degree(h) < need) continue;
    bool fits = true;
    for (int j = 0; j < i && fits; ++j) {
      fits = g.adjacent(h, image[j]) == p.adjacent(i, j);
    }
    if (!fits) continue;
    image.push_back(h);
    used[h] = 1;
    if (extend_embedding(g, p, image, used)) return true;
    used[h] = 0;
    image.pop_back();
  }
  return false;
}

class HoleSearch {
 public:
  HoleSearch(const Graph& g, int lo, int hi) : g_(g), lo_(lo), hi_(hi) {}

  std::optional<HoleReport> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      if (grow()) return HoleReport{path_};
    }
    return std::nullopt;
  }

 private:
  // path_ is a chordless path starting at its smallest vertex path_[0].
  bool grow() {
    const int k = static_cast<int>(path_.size());
    const Vertex s = path_[0];
    const Vertex last = path_.back();
    for (Vertex w = s + 1; w < g_.order(); ++w) {
      if (!g_.adjacent(last, w) || on_path(w)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < k && !chord; ++i) chord = g_.adjacent(w, path_[i]);
      if (chord) continue;
      if (k >= 2 && g_.adjacent(w, s)) {
        // Closing the cycle s .. last w s of length k + 1.
        if (k + 1 >= 4 && k + 1 >= lo_ && k + 1 <= hi_) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      if (k + 2 > hi_) continue;
      path_.push_back(w);
      if (grow()) return true;
      path_.pop_back();
    }
    return false;
  }

  bool on_path(Vertex w) const {
    return std::find(path_.begin(), path_.end(), w) != path_.end();
  }

  const Graph& g_;
  int lo_;
  int hi_;
  std::vector<Vertex> path_;
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
  require_clique_limit(g, "max_clique");
  CliqueResult r;
  r.witness = CliqueSearch(g).run(g.order());
  r.size = static_cast<int>(r.witness.size());
  return r;
}

int clique_number(const Graph& g) { return max_clique(g).size; }

CliqueResult max_independent_set(const Graph& g) {
  require_clique_limit(g, "independence_number");
  return max_clique(complement(g));
}

int independence_number(const Graph& g) { return max_independent_set(g).size; }

Coloring chromatic_number(const Graph& g, int max_n) {
  const int n = g.order();
  if (n > max_n || n > kColoringHardLimit) {
    throw PreconditionError("chromatic_number: n = " + std::to_string(n) +
                            " exceeds exact limit " +
                            std::to_string(std::min(max_n, kColoringHardLimit)));
  }
  if (n == 0) return {};
  const CliqueResult omega = max_clique(g);
  const int alpha = independence_number(g);
  const int lower = std::max(omega.size, (n + alpha - 1) / alpha);
  return ColoringSearch(g, lower).run(omega.witness);
}

bool is_proper_coloring(const Graph& g, std::span<const int> color) {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (int c : color) {
    if (c < 0) return false;
  }
  for (const Edge& e : g.edges()) {
    if (color[e.u] == color[e.v]) return false;
  }
  return true;
}

int colors_used(std::span<const int> color) {
  std::vector<int> seen(color.begin(), color.end());
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g,
                                                const Graph& pattern) {
  if (pattern.order() > 8) {
    throw PreconditionError("find_induced: patterns are limited to 8 vertices");
  }
  std::vector<Vertex> image;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  if (extend_embedding(g, pattern, image, used)) return image;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, PatternKind p) {
  return find_induced(g, pattern(p).graph);
}

bool is_free_of(const Graph& g, PatternKind p) { return !find_induced(g, p); }

std::optional<HoleReport> find_hole_in_range(const Graph& g, int lo, int hi) {
  if (lo < 4 || lo > hi) {
    throw PreconditionError("find_hole_in_range: need 4 <= lo <= hi");
  }
  hi = std::min(hi, g.order());
  if (lo > hi) return std::nullopt;
  return HoleSearch(g, lo, hi).run();
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  for (int i = 0; i < k; ++i) {
    if (!g.contains(cycle[i])) return false;
    for (int j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> chordal_decompose(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination ordering exactly when g is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    done[pick] = 1;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!done[w]) ++weight[w];
    }
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[peo[i]] = i;
  for (Vertex v : peo) {
    Vertex parent = -1;
    VertexSet later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) {
        later.push_back(w);
        if (parent < 0 || position[w] < position[parent]) parent = w;
      }
    }
    for (Vertex w : later) {
      if (w != parent && !g.adjacent(w, parent)) return std::nullopt;
    }
  }
  return peo;
}

CliqueResult max_clique_from_peo(const Graph& g, std::span<const Vertex> peo) {
  std::vector<int> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < peo.size(); ++i) position[peo[i]] = static_cast<int>(i);
  CliqueResult best;
  for (Vertex v : peo) {
    VertexSet c{v};
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) c.push_back(w);
    }
    if (static_cast<int>(c.size()) > best.size) {
      std::sort(c.begin(), c.end());
      best = {static_cast<int>(c.size()), c};
    }
  }
  return best;
}

}  // namespace immlab

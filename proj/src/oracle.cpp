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

#include "immlab/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "immlab/errors.hpp"

namespace immlab {

namespace {

constexpr int kCountCap = 16;

class PathPacker {
 public:
  PathPacker(const Graph& g, const OracleBudget& budget, std::int64_t& nodes)
      : g_(g),
        n_(g.order()),
        budget_(budget),
        nodes_(nodes),
        used_(static_cast<std::size_t>(n_ * n_), 0),
        is_branch_(static_cast<std::size_t>(n_), 0),
        free_degree_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) free_degree_[v] = g.degree(v);
  }

  // Routes every pair among `branch`; on success the routes are in paths().
  bool pack(const VertexSet& branch) {
    std::fill(is_branch_.begin(), is_branch_.end(), 0);
    for (Vertex b : branch) is_branch_[b] = 1;
    pending_.clear();
    demand_.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < branch.size(); ++i) {
      for (std::size_t j = i + 1; j < branch.size(); ++j) {
        pending_.push_back({branch[i], branch[j]});
        ++demand_[branch[i]];
        ++demand_[branch[j]];
      }
    }
    paths_.clear();
    return solve();
  }

  const std::vector<CertPath>& paths() const { return paths_; }

 private:
  bool edge_free(Vertex a, Vertex b) const { return !used_[a * n_ + b]; }

  void set_edge(Vertex a, Vertex b, bool on) {
    used_[a * n_ + b] = used_[b * n_ + a] = on;
    const int delta = on ? -1 : 1;
    free_degree_[a] += delta;
    free_degree_[b] += delta;
  }

  void tick() {
    if (++nodes_ > budget_.node_limit) {
      throw BudgetExceeded("oracle: node limit of " + std::to_string(budget_.node_limit) +
                           " exceeded");
    }
  }

  // Visits simple u-v paths over free edges with non-branch interiors, in
  // lexicographic order. `visit` returns true to stop.
  template <typename Visit>
  bool walk(Vertex x, Vertex target, std::vector<Vertex>& path, std::vector<char>& seen,
            Visit& visit) {
    for (Vertex y = 0; y < n_; ++y) {
      if (!g_.adjacent(x, y) || !edge_free(x, y) || seen[y]) continue;
      if (y == target) {
        path.push_back(y);
        const bool stop = visit(path);
        path.pop_back();
        if (stop) return true;
        continue;
      }
      if (is_branch_[y]) continue;
      seen[y] = 1;
      path.push_back(y);
      const bool stop = walk(y, target, path, seen, visit);
      path.pop_back();
      seen[y] = 0;
      if (stop) return true;
    }
    return false;
  }

  int count_routes(Vertex u, Vertex v) {
    int count = 0;
    std::vector<Vertex> path{u};
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    seen[u] = 1;
    auto visit = [&](const std::vector<Vertex>&) { return ++count >= kCountCap; };
    walk(u, v, path, seen, visit);
    return count;
  }

  bool solve() {
    if (pending_.empty()) return true;
    tick();
    for (Vertex v = 0; v < n_; ++v) {
      if (is_branch_[v] && demand_[v] > free_degree_[v]) return false;
    }
    std::size_t pick = 0;
    int fewest = kCountCap + 1;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const int c = count_routes(pending_[i].first, pending_[i].second);
      if (c == 0) return false;
      if (c < fewest) {
        fewest = c;
        pick = i;
      }
    }
    const auto [u, v] = pending_[pick];
    pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(pick));
    --demand_[u];
    --demand_[v];

    std::vector<Vertex> path{u};
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    seen[u] = 1;
    auto visit = [&](const std::vector<Vertex>& p) {
      tick();
      for (std::size_t i = 1; i < p.size(); ++i) set_edge(p[i - 1], p[i], true);
      paths_.push_back({u, v, p});
      if (solve()) return true;
      paths_.pop_back();
      for (std::size_t i = 1; i < p.size(); ++i) set_edge(p[i - 1], p[i], false);
      return false;
    };
    const bool ok = walk(u, v, path, seen, visit);
    if (!ok) {
      ++demand_[u];
      ++demand_[v];
      pending_.insert(pending_.begin() + static_cast<std::ptrdiff_t>(pick), {u, v});
    }
    return ok;
  }

  const Graph& g_;
  int n_;
  const OracleBudget& budget_;
  std::int64_t& nodes_;
  std::vector<char> used_;
  std::vector<char> is_branch_;
  std::vector<int> free_degree_;
  std::vector<int> demand_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
  std::vector<CertPath> paths_;
};

}  // namespace

std::optional<ImmersionCertificate> brute_force_immersion(const Graph& g, int t,
                                                          const OracleBudget& budget) {
  const int n = g.order();
  if (n > budget.max_n) {
    throw PreconditionError("oracle: graph has " + std::to_string(n) + " vertices, budget allows " +
                            std::to_string(budget.max_n));
  }
  if (t < 0 || t > budget.max_t) {
    throw PreconditionError("oracle: order " + std::to_string(t) + " outside [0, " +
                            std::to_string(budget.max_t) + "]");
  }
  if (t > n) return std::nullopt;
  if (static_cast<long long>(g.size()) < static_cast<long long>(t) * (t - 1) / 2) {
    return std::nullopt;
  }
  VertexSet candidates;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= t - 1) candidates.push_back(v);
  }
  if (static_cast<int>(candidates.size()) < t) return std::nullopt;

  std::int64_t nodes = 0;
  PathPacker packer(g, budget, nodes);
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[i] = i;
  const int c = static_cast<int>(candidates.size());
  while (true) {
    VertexSet branch;
    for (int i : idx) branch.push_back(candidates[i]);
    if (packer.pack(branch)) return make_certificate(g, branch, packer.paths());
    int i = t - 1;
    while (i >= 0 && idx[i] == c - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

int max_immersion_order(const Graph& g, const OracleBudget& budget) {
  int best = 0;
  const int top = std::min(budget.max_t, g.order());
  for (int t = 1; t <= top; ++t) {
    if (!brute_force_immersion(g, t, budget)) break;
    best = t;
  }
  return best;
}

}  // namespace immlab

// Copyright 2026 The rmsmqc Authors
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

#include "rmc/nonrobust.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "rmc/flow.hpp"

namespace rmc {

GeneralGraph::GeneralGraph(int num_vertices, std::vector<EdgeT> edges)
    : num_vertices_(num_vertices), adjacency_(num_vertices) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kInvalidInstance, "graph edge out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidInstance, "self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::kInvalidInstance, "parallel edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

namespace {

// Edmonds' algorithm with explicit blossom bases; O(V^3).
class Blossom {
 public:
  explicit Blossom(const GeneralGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  Matching Run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = FindAugmentingPath(v);
      while (u != -1) {
        const int pu = parent_[u];
        const int next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    Matching out;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) out.push_back({v, match_[v]});
    }
    return out;
  }

 private:
  int LowestCommonAncestor(int a, int b) const {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int FindAugmentingPath(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = LowestCommonAncestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          MarkPath(v, b, to);
          MarkPath(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const GeneralGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching MaxMatching(const GeneralGraph& g) { return Blossom(g).Run(); }

EdgeCover MinEdgeCover(const GeneralGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.neighbors(v).empty()) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "vertex " + std::to_string(v) + " has no incident edge");
    }
  }
  EdgeCover cover = MaxMatching(g);
  std::vector<char> covered(g.num_vertices(), 0);
  for (const auto& [u, v] : cover) covered[u] = covered[v] = 1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (covered[v]) continue;
    const int w = g.neighbors(v).front();
    cover.push_back({std::min(v, w), std::max(v, w)});
    covered[v] = 1;
  }
  return cover;
}

void RequireCoverable(const Instance& inst, std::span<const Count> demand) {
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (demand[j] > 0 && inst.region_neighbors(j).empty()) {
      std::ostringstream os;
      os << "region " << j << " has demand " << demand[j]
         << " but no adjacent location";
      throw Error(ErrorCode::kUncoverableRegion, os.str());
    }
  }
}

Solution SolveQ1(const Instance& inst, std::span<const Count> demand) {
  RequireCoverable(inst, demand);
  Solution sol;
  sol.x.assign(inst.num_locations(), 0);
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (demand[j] > 0) sol.x[inst.region_neighbors(j).front()] += demand[j];
  }
  return sol;
}

DemandReduction ReduceDemands(const Instance& inst,
                              std::span<const Count> demand) {
  const Count cap = inst.num_locations();
  DemandReduction out;
  out.demand.assign(demand.begin(), demand.end());
  out.per_region.assign(inst.num_regions(), 0);
  out.placement.assign(inst.num_locations(), 0);
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (demand[j] <= cap) continue;
    const Count add = CeilDiv(demand[j] - cap, 2);
    out.demand[j] = demand[j] - 2 * add;
    out.per_region[j] = add;
    out.extra += add;
    if (!inst.region_neighbors(j).empty()) {
      out.placement[inst.region_neighbors(j).front()] += add;
    }
  }
  return out;
}

namespace {

// Smallest common neighbor of two regions, or -1.
Index CommonLocation(const Instance& inst, Index j1, Index j2) {
  auto a = inst.region_neighbors(j1);
  auto b = inst.region_neighbors(j2);
  std::size_t p = 0;
  std::size_t r = 0;
  while (p < a.size() && r < b.size()) {
    if (a[p] == b[r]) return a[p];
    if (a[p] < b[r]) {
      ++p;
    } else {
      ++r;
    }
  }
  return -1;
}

}  // namespace

Solution SolveQ2(const Instance& inst, std::span<const Count> demand) {
  if (inst.q() != 2) throw Error(ErrorCode::kBadParams, "SolveQ2 needs q = 2");
  RequireCoverable(inst, demand);
  const DemandReduction red = ReduceDemands(inst, demand);

  // One vertex per remaining demand unit.
  std::vector<Index> region_of;
  for (Index j = 0; j < inst.num_regions(); ++j) {
    for (Count u = 0; u < red.demand[j]; ++u) region_of.push_back(j);
  }
  const int n = static_cast<int>(region_of.size());
  const Index nj = inst.num_regions();
  std::vector<Index> witness(static_cast<std::size_t>(nj) * nj, -1);
  for (Index j1 = 0; j1 < nj; ++j1) {
    for (Index j2 = j1; j2 < nj; ++j2) {
      const Index w = CommonLocation(inst, j1, j2);
      witness[j1 * nj + j2] = witness[j2 * nj + j1] = w;
    }
  }
  std::vector<GeneralGraph::EdgeT> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (witness[region_of[u] * nj + region_of[v]] >= 0) edges.push_back({u, v});
    }
  }
  GeneralGraph g(n, std::move(edges));

  Solution sol;
  sol.x = red.placement;
  // A unit sharing no location with any other unit gets a supplier of its
  // own; the rest form an isolated-vertex-free graph.
  std::vector<int> keep;
  std::vector<int> relabel(n, -1);
  for (int v = 0; v < n; ++v) {
    if (g.neighbors(v).empty()) {
      sol.x[inst.region_neighbors(region_of[v]).front()] += 1;
    } else {
      relabel[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  std::vector<GeneralGraph::EdgeT> kept_edges;
  for (const auto& [u, v] : g.edges()) kept_edges.push_back({relabel[u], relabel[v]});
  const GeneralGraph core(static_cast<int>(keep.size()), std::move(kept_edges));
  for (const auto& [u, v] : MinEdgeCover(core)) {
    const Index j1 = region_of[keep[u]];
    const Index j2 = region_of[keep[v]];
    sol.x[witness[j1 * nj + j2]] += 1;
  }
  return sol;
}

Solution GreedyCover(const Instance& inst, std::span<const Count> demand) {
  RequireCoverable(inst, demand);
  const Count q = inst.q();
  std::vector<Count> residual(demand.begin(), demand.end());
  Count remaining = std::accumulate(residual.begin(), residual.end(), Count{0});
  Solution sol;
  sol.x.assign(inst.num_locations(), 0);
  std::vector<Index> order;
  while (remaining > 0) {
    Index best = -1;
    Count best_score = 0;
    for (Index i = 0; i < inst.num_locations(); ++i) {
      Count s = 0;
      for (Index j : inst.location_neighbors(i)) s += residual[j];
      s = std::min(s, q);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    // Cannot happen once RequireCoverable passed.
    if (best < 0) break;
    auto nbrs = inst.location_neighbors(best);
    order.assign(nbrs.begin(), nbrs.end());
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return residual[a] > residual[b];
    });
    Count capacity = q;
    for (Index j : order) {
      const Count take = std::min(capacity, residual[j]);
      residual[j] -= take;
      capacity -= take;
      if (capacity == 0) break;
    }
    remaining -= q - capacity;
    sol.x[best] += 1;
  }
  return sol;
}

Solution SolveExact(const Instance& inst, std::span<const Count> demand,
                    const SolveLimits& limits) {
  RequireCoverable(inst, demand);
  const Index ni = inst.num_locations();
  const Count q = inst.q();
  Solution sol;
  sol.x.assign(ni, 0);
  if (std::all_of(demand.begin(), demand.end(), [](Count d) { return d == 0; })) {
    return sol;
  }

  const Solution greedy = GreedyCover(inst, demand);
  const Count upper = greedy.objective();

  MilpModel model;
  model.objective_integral = true;
  for (Index i = 0; i < ni; ++i) {
    model.AddVariable(1.0, 0.0, static_cast<double>(upper), true);
  }
  const std::vector<Edge> edges = inst.edges();
  std::vector<std::vector<LinearTerm>> demand_rows(inst.num_regions());
  std::vector<std::vector<LinearTerm>> capacity_rows(ni);
  for (Index i = 0; i < ni; ++i) capacity_rows[i].push_back({i, -double(q)});
  for (const Edge& e : edges) {
    const int y = model.AddVariable(0.0, 0.0, kInfinity, false);
    demand_rows[e.region].push_back({y, 1.0});
    capacity_rows[e.location].push_back({y, 1.0});
  }
  for (Index j = 0; j < inst.num_regions(); ++j) {
    model.AddRow(std::move(demand_rows[j]), Relation::kGreaterEqual,
                 static_cast<double>(demand[j]));
  }
  for (Index i = 0; i < ni; ++i) {
    model.AddRow(std::move(capacity_rows[i]), Relation::kLessEqual, 0.0);
  }

  MilpOptions options;
  {
    std::vector<double> start(model.num_variables(), 0.0);
    for (Index i = 0; i < ni; ++i) start[i] = static_cast<double>(greedy.x[i]);
    const Assignment y = RecoverAssignment(inst, greedy.x, demand);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      start[ni + e] = static_cast<double>(y[edges[e].location][edges[e].region]);
    }
    options.initial_incumbent = std::move(start);
  }
  options.rounding = [ni](const std::vector<double>& x) {
    std::vector<double> r = x;
    for (Index i = 0; i < ni; ++i) r[i] = std::ceil(x[i] - kIntegralityTolerance);
    return std::optional<std::vector<double>>(std::move(r));
  };
  const MilpOutcome out = SolveMilp(model, limits, options);
  if (out.status != MilpStatus::kOptimal) {
    throw Error(ErrorCode::kSolverLimit,
                std::string("allocation MILP ended with status ") +
                    MilpStatusName(out.status));
  }
  for (Index i = 0; i < ni; ++i) sol.x[i] = std::llround(out.x[i]);
  Scenario s{std::vector<Count>(demand.begin(), demand.end())};
  sol.assignments.push_back({s, RecoverAssignment(inst, sol.x, demand)});
  return sol;
}

}  // namespace rmc

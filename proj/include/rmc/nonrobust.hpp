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

// Solvers for the deterministic problem: cover a fixed demand vector d with
// the fewest suppliers. The demand bounds and gamma stored in the instance
// are ignored here; only q and the graph matter.

#ifndef RMC_NONROBUST_HPP_
#define RMC_NONROBUST_HPP_

#include <span>
#include <utility>
#include <vector>

#include "rmc/core.hpp"
#include "rmc/milp.hpp"

namespace rmc {

// Simple undirected graph on vertices 0..n-1.
class GeneralGraph {
 public:
  using EdgeT = std::pair<int, int>;

  GeneralGraph() = default;
  // Throws Error(kInvalidInstance) on self-loops, parallel edges or
  // out-of-range endpoints. Edges are stored with first < second.
  GeneralGraph(int num_vertices, std::vector<EdgeT> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<EdgeT>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

 private:
  int num_vertices_ = 0;
  std::vector<EdgeT> edges_;
  std::vector<std::vector<int>> adjacency_;
};

using Matching = std::vector<GeneralGraph::EdgeT>;
using EdgeCover = std::vector<GeneralGraph::EdgeT>;

// Maximum-cardinality matching by Edmonds' blossom algorithm.
Matching MaxMatching(const GeneralGraph& g);

// Minimum edge cover: a maximum matching plus one edge per exposed vertex.
// Throws Error(kIsolatedVertex) if some vertex has no incident edge.
EdgeCover MinEdgeCover(const GeneralGraph& g);

// q = 1: sum(d) suppliers, each region's demand at its first neighbor.
Solution SolveQ1(const Instance& inst, std::span<const Count> demand);

struct DemandReduction {
  std::vector<Count> demand;
  Count extra = 0;
  // Suppliers pre-placed for each region.
  std::vector<Count> per_region;
  // The same suppliers as a location vector (smallest-index neighbor).
  std::vector<Count> placement;
};

// q = 2: caps every demand at |I| by pre-placing ceil((d_j - |I|) / 2)
// suppliers, which preserves the optimum up to the added count.
DemandReduction ReduceDemands(const Instance& inst,
                              std::span<const Count> demand);

// q = 2 via minimum edge cover on the clique expansion of the demand units.
Solution SolveQ2(const Instance& inst, std::span<const Count> demand);

// Any q: allocation MILP with integral x and continuous y. Throws
// Error(kSolverLimit) if the limits stop the search before optimality.
Solution SolveExact(const Instance& inst, std::span<const Count> demand,
                    const SolveLimits& limits = {});

// Greedy multicover: add a supplier at the location with the largest capped
// residual demand in its neighborhood until everything is served.
Solution GreedyCover(const Instance& inst, std::span<const Count> demand);

// Throws Error(kUncoverableRegion) if a region with positive demand has no
// neighbor.
void RequireCoverable(const Instance& inst, std::span<const Count> demand);

}  // namespace rmc

#endif  // RMC_NONROBUST_HPP_

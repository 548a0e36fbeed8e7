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

// Max-flow certificates for a fixed supplier vector x and demand vector d.
//
// The network has a source s, one node per location, one node per region
// and a sink t. Arcs s->i carry q*x_i, arcs i->j (one per edge of the
// instance) are uncapacitated and arcs j->t carry d_j. x serves d iff the
// maximum flow saturates every j->t arc.

#ifndef RMC_FLOW_HPP_
#define RMC_FLOW_HPP_

#include <optional>
#include <span>
#include <vector>

#include "rmc/core.hpp"

namespace rmc {

// Integral max-flow by blocking flows on BFS level graphs (Dinic).
class FlowGraph {
 public:
  struct Arc {
    int from;
    int to;
    Count capacity;
    Count flow = 0;
  };

  explicit FlowGraph(int num_nodes);

  // Returns the arc id. The paired reverse arc is id ^ 1.
  int AddArc(int from, int to, Count capacity);

  Count MaxFlow(int source, int sink);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  const Arc& arc(int id) const { return arcs_[id]; }
  // Forward arcs only (even ids), in insertion order.
  std::vector<Arc> forward_arcs() const;
  // Nodes reachable from `source` in the residual graph of the current flow.
  std::vector<char> ResidualReachable(int source) const;

 private:
  bool BuildLevels(int source, int sink);
  Count Augment(int node, int sink, Count limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

// The covering network for (inst, x, d).
class CoverNetwork {
 public:
  CoverNetwork(const Instance& inst, std::span<const Count> x,
               std::span<const Count> demand);

  int source() const { return 0; }
  int sink() const { return 1; }
  int location_node(Index i) const { return 2 + i; }
  int region_node(Index j) const { return 2 + num_locations_ + j; }

  // Sentinel capacity of the location->region arcs: sum(d) + 1.
  Count infinity() const { return infinity_; }

  Count Solve();
  const FlowGraph& graph() const { return graph_; }
  FlowGraph& graph() { return graph_; }
  int edge_arc(std::size_t edge_index) const { return edge_arcs_[edge_index]; }
  const std::vector<Edge>& edge_list() const { return edges_; }

 private:
  Index num_locations_;
  Count infinity_;
  FlowGraph graph_;
  std::vector<Edge> edges_;
  std::vector<int> edge_arcs_;
};

struct FlowResult {
  Count value = 0;
  // Flow on every forward arc, in insertion order (s->i, i->j, j->t).
  std::vector<Count> arc_flow;
};

FlowResult MaxFlow(const Instance& inst, std::span<const Count> x,
                   std::span<const Count> demand);

// True iff x admits an assignment covering d exactly.
bool CheckFeasible(const Instance& inst, std::span<const Count> x,
                   std::span<const Count> demand);

// Integral y with sum_i y_ij = d_j and sum_j y_ij <= q x_i. Throws
// kInfeasibleAssignment when no such y exists.
Assignment RecoverAssignment(const Instance& inst, std::span<const Count> x,
                             std::span<const Count> demand);

// When x cannot serve d, returns the regions on the sink side of a minimum
// cut; they satisfy q*x(N(S)) < d(S). Returns nullopt when x serves d.
std::optional<IndexSet> ViolatedSubsetFromCut(const Instance& inst,
                                              std::span<const Count> x,
                                              std::span<const Count> demand);

}  // namespace rmc

#endif  // RMC_FLOW_HPP_

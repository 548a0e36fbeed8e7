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

#include "rmc/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace rmc {

FlowGraph::FlowGraph(int num_nodes) : adjacency_(num_nodes) {}

int FlowGraph::AddArc(int from, int to, Count capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({from, to, capacity, 0});
  arcs_.push_back({to, from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool FlowGraph::BuildLevels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Count FlowGraph::Augment(int node, int sink, Count limit) {
  if (node == sink) return limit;
  for (std::size_t& c = cursor_[node]; c < adjacency_[node].size(); ++c) {
    const int id = adjacency_[node][c];
    Arc& a = arcs_[id];
    const Count residual = a.capacity - a.flow;
    if (residual <= 0 || level_[a.to] != level_[node] + 1) continue;
    const Count pushed = Augment(a.to, sink, std::min(limit, residual));
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

Count FlowGraph::MaxFlow(int source, int sink) {
  Count total = 0;
  while (BuildLevels(source, sink)) {
    cursor_.assign(adjacency_.size(), 0);
    while (Count pushed = Augment(source, sink,
                                  std::numeric_limits<Count>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<FlowGraph::Arc> FlowGraph::forward_arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size() / 2);
  for (std::size_t id = 0; id < arcs_.size(); id += 2) out.push_back(arcs_[id]);
  return out;
}

std::vector<char> FlowGraph::ResidualReachable(int source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity - a.flow > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

CoverNetwork::CoverNetwork(const Instance& inst, std::span<const Count> x,
                           std::span<const Count> demand)
    : num_locations_(inst.num_locations()),
      infinity_(std::accumulate(demand.begin(), demand.end(), Count{0}) + 1),
      graph_(2 + inst.num_locations() + inst.num_regions()),
      edges_(inst.edges()) {
  for (Index i = 0; i < inst.num_locations(); ++i) {
    graph_.AddArc(source(), location_node(i), inst.q() * x[i]);
  }
  edge_arcs_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    edge_arcs_.push_back(graph_.AddArc(location_node(e.location),
                                       region_node(e.region), infinity_));
  }
  for (Index j = 0; j < inst.num_regions(); ++j) {
    graph_.AddArc(region_node(j), sink(), demand[j]);
  }
}

Count CoverNetwork::Solve() { return graph_.MaxFlow(source(), sink()); }

FlowResult MaxFlow(const Instance& inst, std::span<const Count> x,
                   std::span<const Count> demand) {
  CoverNetwork net(inst, x, demand);
  FlowResult out;
  out.value = net.Solve();
  for (const auto& a : net.graph().forward_arcs()) out.arc_flow.push_back(a.flow);
  return out;
}

bool CheckFeasible(const Instance& inst, std::span<const Count> x,
                   std::span<const Count> demand) {
  const Count total = std::accumulate(demand.begin(), demand.end(), Count{0});
  if (total == 0) return true;
  CoverNetwork net(inst, x, demand);
  return net.Solve() == total;
}

Assignment RecoverAssignment(const Instance& inst, std::span<const Count> x,
                             std::span<const Count> demand) {
  const Count total = std::accumulate(demand.begin(), demand.end(), Count{0});
  CoverNetwork net(inst, x, demand);
  if (net.Solve() != total) {
    throw Error(ErrorCode::kInfeasibleAssignment,
                "supplier vector cannot serve the demand");
  }
  Assignment y(inst.num_locations(),
               std::vector<Count>(inst.num_regions(), 0));
  const auto& edges = net.edge_list();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    y[edges[e].location][edges[e].region] = net.graph().arc(net.edge_arc(e)).flow;
  }
  return y;
}

std::optional<IndexSet> ViolatedSubsetFromCut(const Instance& inst,
                                              std::span<const Count> x,
                                              std::span<const Count> demand) {
  const Count total = std::accumulate(demand.begin(), demand.end(), Count{0});
  CoverNetwork net(inst, x, demand);
  if (net.Solve() == total) return std::nullopt;
  const auto reach = net.graph().ResidualReachable(net.source());
  IndexSet subset;
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (!reach[net.region_node(j)]) subset.push_back(j);
  }
  return subset;
}

}  // namespace rmc

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

// Brute-force oracles used only by tests. Nothing in here calls the flow,
// LP, MILP or separation code it is used to check.

#ifndef RMC_TESTS_ORACLES_HPP_
#define RMC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "rmc/core.hpp"
#include "rmc/lp.hpp"

namespace rmc::testing {

// ---------------------------------------------------------------------------
// Linear programming by vertex enumeration inside the box [l, min(u, cap)].

struct VertexResult {
  bool feasible = false;
  double objective = 0.0;
  bool hits_box = false;
};

inline std::optional<std::vector<double>> SolveSquare(
    std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-10) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline VertexResult EnumerateLpVertices(const LpModel& m, double cap) {
  const int n = m.num_variables();
  // Hyperplanes: (coefficients, rhs, is_cap).
  struct Plane {
    std::vector<double> a;
    double rhs;
    bool is_cap;
  };
  std::vector<Plane> planes;
  for (const auto& row : m.rows) {
    std::vector<double> a(n, 0.0);
    for (const auto& t : row.terms) a[t.var] += t.coef;
    planes.push_back({a, row.rhs, false});
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> a(n, 0.0);
    a[j] = 1.0;
    planes.push_back({a, m.lower[j], false});
    const bool capped = !(m.upper[j] <= cap);
    planes.push_back({a, capped ? cap : m.upper[j], capped});
  }
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j) {
      if (x[j] < m.lower[j] - 1e-9 || x[j] > std::min(m.upper[j], cap) + 1e-9)
        return false;
    }
    for (int i = 0; i < m.num_rows(); ++i) {
      const double act = m.RowActivity(i, x);
      const double rhs = m.rows[i].rhs;
      switch (m.rows[i].relation) {
        case Relation::kLessEqual: if (act > rhs + 1e-9) return false; break;
        case Relation::kGreaterEqual: if (act < rhs - 1e-9) return false; break;
        case Relation::kEqual: if (std::abs(act - rhs) > 1e-9) return false; break;
      }
    }
    return true;
  };
  VertexResult best;
  std::vector<std::pair<double, bool>> vertices;
  const int p = static_cast<int>(planes.size());
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      bool on_cap = false;
      for (int k : pick) {
        a.push_back(planes[k].a);
        b.push_back(planes[k].rhs);
        on_cap = on_cap || planes[k].is_cap;
      }
      auto x = SolveSquare(a, b);
      if (!x || !feasible(*x)) return;
      vertices.push_back({m.Objective(*x), on_cap});
      return;
    }
    for (int k = start; k < p; ++k) {
      pick[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  if (n == 0) {
    std::vector<double> x;
    best.feasible = feasible(x);
    return best;
  }
  rec(0, 0);
  if (vertices.empty()) return best;
  best.feasible = true;
  best.objective = std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) best.objective = std::min(best.objective, v.first);
  for (const auto& v : vertices) {
    if (v.second && v.first < best.objective + 1e-7) best.hits_box = true;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Pure-integer models by exhaustive enumeration over the box [lo, hi].

inline std::optional<double> EnumerateIntegerModel(const LpModel& m,
                                                   const std::vector<int>& lo,
                                                   const std::vector<int>& hi) {
  const int n = m.num_variables();
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = lo[j];
  std::optional<double> best;
  while (true) {
    if (m.MaxViolation(x) <= 1e-9) {
      const double v = m.Objective(x);
      if (!best || v < *best) best = v;
    }
    int j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    x[j] += 1.0;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Covering oracles by subset enumeration (|J| <= 25).

// N(S) as a location bitmask, from the raw adjacency.
inline std::vector<std::uint64_t> NeighborMasks(const Instance& inst) {
  std::vector<std::uint64_t> masks(inst.num_regions(), 0);
  for (Index j = 0; j < inst.num_regions(); ++j) {
    for (Index i : inst.region_neighbors(j)) masks[j] |= std::uint64_t{1} << i;
  }
  return masks;
}

// Calls fn(mask, sum_over_S(values), x(N(S))) for every subset S of J.
template <typename Fn>
void ForEachSubset(const Instance& inst, const std::vector<Count>& x, Fn fn) {
  const Index nj = inst.num_regions();
  const auto nmask = NeighborMasks(inst);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nj); ++s) {
    std::uint64_t locs = 0;
    for (Index j = 0; j < nj; ++j) {
      if (s >> j & 1) locs |= nmask[j];
    }
    Count cap = 0;
    for (Index i = 0; i < inst.num_locations(); ++i) {
      if (locs >> i & 1) cap += x[i];
    }
    fn(s, cap);
  }
}

// Hall-type condition: for all S, q x(N(S)) >= d(S).
inline bool SubsetFeasible(const Instance& inst, const std::vector<Count>& x,
                           const std::vector<Count>& d) {
  bool ok = true;
  ForEachSubset(inst, x, [&](std::uint64_t s, Count cap) {
    Count need = 0;
    for (Index j = 0; j < inst.num_regions(); ++j) {
      if (s >> j & 1) need += d[j];
    }
    if (inst.q() * cap < need) ok = false;
  });
  return ok;
}

inline Count WorstCaseDemand(const Instance& inst, std::uint64_t s) {
  Count b = 0;
  Count a_out = 0;
  for (Index j = 0; j < inst.num_regions(); ++j) {
    if (s >> j & 1) {
      b += inst.upper(j);
    } else {
      a_out += inst.lower(j);
    }
  }
  return std::max<Count>(0, std::min(b, inst.gamma() - a_out));
}

// Largest tilde_d(S) - q x(N(S)) over all S (0 for S empty).
inline Count MaxViolationBrute(const Instance& inst,
                               const std::vector<Count>& x) {
  Count best = 0;
  ForEachSubset(inst, x, [&](std::uint64_t s, Count cap) {
    best = std::max(best, WorstCaseDemand(inst, s) - inst.q() * cap);
  });
  return best;
}

inline bool RobustFeasibleBrute(const Instance& inst,
                                const std::vector<Count>& x) {
  return MaxViolationBrute(inst, x) <= 0;
}

// Visits every x in Z^n_{>=0} with sum(x) == total.
template <typename Fn>
bool ForEachComposition(int n, Count total, std::vector<Count>& x, int pos,
                        Fn& fn) {
  if (pos == n - 1) {
    x[pos] = total;
    return fn(x);
  }
  for (Count v = total; v >= 0; --v) {
    x[pos] = v;
    if (ForEachComposition(n, total - v, x, pos + 1, fn)) return true;
  }
  return false;
}

// Smallest total t such that some x with sum t satisfies `ok`.
template <typename Pred>
std::optional<Count> SmallestFeasibleTotal(int n, Count max_total, Pred ok) {
  if (n == 0) {
    std::vector<Count> x;
    return ok(x) ? std::optional<Count>(0) : std::nullopt;
  }
  std::vector<Count> x(n, 0);
  for (Count t = 0; t <= max_total; ++t) {
    auto fn = [&](const std::vector<Count>& v) { return ok(v); };
    if (ForEachComposition(n, t, x, 0, fn)) return t;
  }
  return std::nullopt;
}

// Deterministic optimum: fewest suppliers covering d, by enumeration.
inline Count BruteMinSuppliers(const Instance& inst,
                               const std::vector<Count>& d) {
  Count bound = 0;
  for (Count v : d) bound += v;
  auto r = SmallestFeasibleTotal(
      inst.num_locations(), bound,
      [&](const std::vector<Count>& x) { return SubsetFeasible(inst, x, d); });
  return r.value_or(-1);
}

// Robust optimum: enumerate x up to the trivial upper bound.
inline Count BruteRobustOptimum(const Instance& inst) {
  Count bound = 0;
  for (Count b : inst.upper()) bound += (b + inst.q() - 1) / inst.q();
  auto r = SmallestFeasibleTotal(
      inst.num_locations(), bound,
      [&](const std::vector<Count>& x) { return RobustFeasibleBrute(inst, x); });
  return r.value_or(-1);
}

// All extreme scenarios (sum == gamma, a <= xi <= b).
inline std::vector<std::vector<Count>> AllExtremeScenarios(const Instance& inst) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> xi(inst.num_regions());
  std::function<void(Index, Count)> rec = [&](Index j, Count left) {
    if (j == inst.num_regions()) {
      if (left == 0) out.push_back(xi);
      return;
    }
    for (Count v = inst.lower(j); v <= inst.upper(j) && v <= left; ++v) {
      xi[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, inst.gamma());
  return out;
}

// ---------------------------------------------------------------------------
// Graph oracles.

// Maximum matching size by branching on the lowest unmatched vertex.
inline int BruteMaxMatching(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> used(n, 0);
  std::function<int(int)> rec = [&](int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = rec(v + 1);  // leave v exposed
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + rec(v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return rec(0);
}

// Minimum edge cover size by subset enumeration over edges (<= 20 edges).
inline int BruteMinEdgeCover(int n, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    const int size = __builtin_popcount(s);
    if (best >= 0 && size >= best) continue;
    std::vector<char> cov(n, 0);
    for (int e = 0; e < m; ++e) {
      if (s >> e & 1) cov[edges[e].first] = cov[edges[e].second] = 1;
    }
    if (std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; })) {
      best = size;
    }
  }
  return best;
}

// Domination number by subset enumeration (n <= 16).
inline int BruteDominationNumber(int n,
                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = 1u << v;
  for (auto [u, v] : edges) {
    closed[u] |= 1u << v;
    closed[v] |= 1u << u;
  }
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = n;
  for (std::uint32_t s = 0; s <= all; ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    std::uint32_t dom = 0;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) dom |= closed[v];
    }
    if (dom == all) best = size;
  }
  return best;
}

}  // namespace rmc::testing

#endif  // RMC_TESTS_ORACLES_HPP_

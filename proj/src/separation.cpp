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

#include "rmc/separation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "rmc/flow.hpp"

namespace rmc {
namespace {

// True if subset `a` ranks before `b`: at the lowest index where they
// differ, `a` contains it.
bool RanksBefore(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

Count RoundObjective(double value) {
  const double r = std::round(value);
  if (std::abs(r - value) > 1e-5) {
    std::ostringstream os;
    os << "separation objective " << value << " is not integral";
    throw Error(ErrorCode::kNumericalFailure, os.str());
  }
  return static_cast<Count>(r);
}

void CheckSize(const Instance& inst, std::span<const Count> x) {
  if (static_cast<Index>(x.size()) != inst.num_locations()) {
    throw Error(ErrorCode::kInvalidInstance, "x has the wrong length");
  }
}

IndexSet Neighborhood(const Instance& inst, const IndexSet& subset) {
  std::vector<char> in(inst.num_locations(), 0);
  for (Index j : subset) {
    for (Index i : inst.region_neighbors(j)) in[i] = 1;
  }
  IndexSet out;
  for (Index i = 0; i < inst.num_locations(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

Violation MakeViolation(const Instance& inst, std::span<const Count> x,
                        IndexSet subset) {
  Violation v;
  v.amount = ViolationAmount(inst, x, subset);
  v.subset = std::move(subset);
  return v;
}

}  // namespace

std::optional<Violation> SeparateBrute(const Instance& inst,
                                       std::span<const Count> x) {
  CheckSize(inst, x);
  const Index nj = inst.num_regions();
  if (nj > kMaxBruteRegions) {
    std::ostringstream os;
    os << nj << " regions exceed the enumeration limit of "
       << kMaxBruteRegions;
    throw Error(ErrorCode::kTooLarge, os.str());
  }
  const Count q = inst.q();
  const Count sum_a = inst.sum_lower();

  // Running b(S), a(S), x(N(S)) and per-location neighbor counts in S.
  std::vector<int> hits(inst.num_locations(), 0);
  Count b_s = 0, a_s = 0, cap = 0;
  std::uint64_t mask = 0;
  Count best = 0;
  std::uint64_t best_mask = 0;

  const std::uint64_t total = std::uint64_t{1} << nj;
  for (std::uint64_t step = 1; step < total; ++step) {
    const Index j = std::countr_zero(step);
    mask ^= std::uint64_t{1} << j;
    const int sign = (mask >> j & 1) ? 1 : -1;
    b_s += sign * inst.upper(j);
    a_s += sign * inst.lower(j);
    for (Index i : inst.region_neighbors(j)) {
      if (sign > 0) {
        if (hits[i]++ == 0) cap += x[i];
      } else {
        if (--hits[i] == 0) cap -= x[i];
      }
    }
    const Count amount = TildeD(inst, b_s, sum_a - a_s) - q * cap;
    if (amount > best || (amount == best && best > 0 &&
                          RanksBefore(mask, best_mask))) {
      best = amount;
      best_mask = mask;
    }
  }
  if (best <= 0) return std::nullopt;
  Violation v;
  v.subset = FromMask(best_mask);
  v.amount = best;
  return v;
}

MilpModel BuildSetSeparationModel(const Instance& inst,
                                  std::span<const Count> x) {
  CheckSize(inst, x);
  const Index ni = inst.num_locations();
  const Index nj = inst.num_regions();
  const double q = static_cast<double>(inst.q());
  const double k = static_cast<double>(inst.max_location_degree());
  const double gamma_prime =
      static_cast<double>(inst.gamma() - inst.sum_lower());

  MilpModel m;
  for (Index i = 0; i < ni; ++i) {
    m.AddVariable(q * static_cast<double>(x[i]), 0.0, 1.0, true);
  }
  for (Index j = 0; j < nj; ++j) m.AddVariable(0.0, 0.0, 1.0, true);
  const int d = m.AddVariable(-1.0, 0.0, kInfinity, false);

  std::vector<LinearTerm> by_b{{d, 1.0}}, by_a{{d, 1.0}};
  for (Index j = 0; j < nj; ++j) {
    if (inst.upper(j) != 0) {
      by_b.push_back({ni + j, -static_cast<double>(inst.upper(j))});
    }
    if (inst.lower(j) != 0) {
      by_a.push_back({ni + j, -static_cast<double>(inst.lower(j))});
    }
  }
  m.AddRow(std::move(by_b), Relation::kLessEqual, 0.0);
  m.AddRow(std::move(by_a), Relation::kLessEqual, gamma_prime);
  for (Index i = 0; i < ni; ++i) {
    std::vector<LinearTerm> row{{i, k}};
    for (Index j : inst.location_neighbors(i)) row.push_back({ni + j, -1.0});
    m.AddRow(std::move(row), Relation::kGreaterEqual, 0.0);
  }
  // Every integral z admits an optimal d that is integral.
  m.objective_integral = true;
  return m;
}

std::optional<Violation> SeparateSet(const Instance& inst,
                                     std::span<const Count> x,
                                     const SolveLimits& limits) {
  MilpModel m = BuildSetSeparationModel(inst, x);
  const Index ni = inst.num_locations();
  const Index nj = inst.num_regions();
  // Valid per-edge rows y_i >= z_j tighten the relaxation of the
  // aggregated k * y_i >= sum z_j rows.
  for (const Edge& e : inst.edges()) {
    m.AddRow({{e.location, 1.0}, {ni + e.region, -1.0}},
             Relation::kGreaterEqual, 0.0);
  }
  // Threshold z at 1/2 and complete y and d exactly.
  MilpOptions options;
  options.rounding = [&](const std::vector<double>& lp) {
    IndexSet subset;
    for (Index j = 0; j < nj; ++j) {
      if (lp[ni + j] > 0.5) subset.push_back(j);
    }
    std::vector<double> point(ni + nj + 1, 0.0);
    for (Index j : subset) point[ni + j] = 1.0;
    for (Index i : Neighborhood(inst, subset)) point[i] = 1.0;
    point[ni + nj] = static_cast<double>(TildeD(inst, subset));
    return std::optional<std::vector<double>>(std::move(point));
  };
  const MilpOutcome out = SolveMilp(m, limits, options);
  if (out.status != MilpStatus::kOptimal) {
    throw Error(ErrorCode::kSolverLimit,
                std::string("set separation ended with status ") +
                    MilpStatusName(out.status));
  }
  const Count theta = RoundObjective(out.objective);
  if (theta >= 0) return std::nullopt;
  IndexSet subset;
  for (Index j = 0; j < nj; ++j) {
    if (out.x[ni + j] > 0.5) subset.push_back(j);
  }
  Violation v = MakeViolation(inst, x, std::move(subset));
  if (v.amount != -theta) {
    throw Error(ErrorCode::kNumericalFailure,
                "set separation subset disagrees with its objective");
  }
  return v;
}

MilpModel BuildBigMSeparationModel(const Instance& inst,
                                   std::span<const Count> x) {
  CheckSize(inst, x);
  const Index ni = inst.num_locations();
  const Index nj = inst.num_regions();
  const double q = static_cast<double>(inst.q());
  const double k = static_cast<double>(inst.max_location_degree());
  const double gamma = static_cast<double>(inst.gamma());

  MilpModel m;
  for (Index i = 0; i < ni; ++i) {
    m.AddVariable(q * static_cast<double>(x[i]), 0.0, 1.0, true);
  }
  const int nu0 = ni;
  for (Index j = 0; j < nj; ++j) m.AddVariable(0.0, 0.0, 1.0, true);
  const int omega0 = ni + nj;
  for (Index j = 0; j < nj; ++j) m.AddVariable(-1.0, 0.0, kInfinity, false);
  const int xi0 = ni + 2 * nj;
  for (Index j = 0; j < nj; ++j) {
    m.AddVariable(0.0, static_cast<double>(inst.lower(j)),
                  static_cast<double>(inst.upper(j)), true);
  }

  for (Index i = 0; i < ni; ++i) {
    std::vector<LinearTerm> row{{i, k}};
    for (Index j : inst.location_neighbors(i)) row.push_back({nu0 + j, -1.0});
    m.AddRow(std::move(row), Relation::kGreaterEqual, 0.0);
  }
  for (Index j = 0; j < nj; ++j) {
    m.AddRow({{omega0 + j, 1.0}, {xi0 + j, -1.0}}, Relation::kLessEqual, 0.0);
  }
  for (Index j = 0; j < nj; ++j) {
    m.AddRow({{omega0 + j, 1.0}, {nu0 + j, -gamma}}, Relation::kLessEqual,
             0.0);
  }
  std::vector<LinearTerm> total;
  for (Index j = 0; j < nj; ++j) total.push_back({xi0 + j, 1.0});
  m.AddRow(std::move(total), Relation::kEqual, gamma);
  m.objective_integral = true;
  return m;
}

std::optional<Violation> SeparateBigM(const Instance& inst,
                                      std::span<const Count> x,
                                      const SolveLimits& limits) {
  const MilpModel m = BuildBigMSeparationModel(inst, x);
  const MilpOutcome out = SolveMilp(m, limits);
  if (out.status != MilpStatus::kOptimal) {
    throw Error(ErrorCode::kSolverLimit,
                std::string("Big-M separation ended with status ") +
                    MilpStatusName(out.status));
  }
  const Count theta = RoundObjective(out.objective);
  if (theta >= 0) return std::nullopt;
  const Index ni = inst.num_locations();
  const Index nj = inst.num_regions();
  IndexSet subset;
  Scenario xi;
  xi.demand.resize(nj);
  for (Index j = 0; j < nj; ++j) {
    if (out.x[ni + j] > 0.5) subset.push_back(j);
    xi.demand[j] = static_cast<Count>(std::llround(out.x[ni + 2 * nj + j]));
  }
  Violation v = MakeViolation(inst, x, std::move(subset));
  if (v.amount != -theta) {
    throw Error(ErrorCode::kNumericalFailure,
                "Big-M separation subset disagrees with its objective");
  }
  Count on_subset = 0;
  for (Index j : v.subset) on_subset += xi.demand[j];
  v.witness = (xi.is_extreme(inst) && on_subset == TildeD(inst, v.subset))
                  ? xi
                  : ScenarioFromSubset(inst, v.subset);
  return v;
}

Scenario ScenarioFromSubset(const Instance& inst,
                            std::span<const Index> subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::kEmptySubset, "scenario of an empty subset");
  }
  const Index nj = inst.num_regions();
  std::vector<char> in(nj, 0);
  Count b_s = 0, a_out = 0;
  for (Index j : subset) {
    if (j < 0 || j >= nj || in[j]) {
      throw Error(ErrorCode::kInvalidInstance, "malformed region subset");
    }
    in[j] = 1;
    b_s += inst.upper(j);
  }
  for (Index j = 0; j < nj; ++j) {
    if (!in[j]) a_out += inst.lower(j);
  }

  Scenario s;
  s.demand.resize(nj);
  // Fixed part: b on S if that fits, else a outside S. The rest is
  // raised from a toward b in ascending index order.
  const bool upper_on_subset = b_s + a_out <= inst.gamma();
  Count left = inst.gamma();
  for (Index j = 0; j < nj; ++j) {
    s.demand[j] = (upper_on_subset && in[j]) ? inst.upper(j) : inst.lower(j);
    left -= s.demand[j];
  }
  for (Index j = 0; j < nj && left > 0; ++j) {
    if (upper_on_subset == static_cast<bool>(in[j])) continue;
    const Count raise = std::min(left, inst.upper(j) - s.demand[j]);
    s.demand[j] += raise;
    left -= raise;
  }
  return s;
}

std::optional<Violation> SubsetFromScenario(const Instance& inst,
                                            std::span<const Count> x,
                                            const Scenario& scenario) {
  auto subset = ViolatedSubsetFromCut(inst, x, scenario.demand);
  if (!subset) return std::nullopt;
  return MakeViolation(inst, x, std::move(*subset));
}

}  // namespace rmc

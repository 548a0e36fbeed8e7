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

// LP-based branch and bound for mixed-integer models (minimization).
//
// Branching picks the most fractional integer variable (smallest index on
// ties) and explores the floor child first. Open nodes are processed in
// best-bound order, deepest first among equal bounds. When every feasible
// point has an integral objective value the caller can say so, and nodes
// whose relaxation cannot beat the incumbent by a whole unit are pruned.

#ifndef RMC_MILP_HPP_
#define RMC_MILP_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rmc/lp.hpp"

namespace rmc {

inline constexpr double kIntegralityTolerance = 1e-6;

struct MilpModel {
  LpModel lp;
  std::vector<bool> integral;
  // Set when every feasible point has an integral objective value.
  bool objective_integral = false;

  int AddVariable(double cost, double lower, double upper, bool is_integral);
  int AddRow(std::vector<LinearTerm> terms, Relation relation, double rhs) {
    return lp.AddRow(std::move(terms), relation, rhs);
  }
  int num_variables() const { return lp.num_variables(); }
  int num_rows() const { return lp.num_rows(); }
  int num_integral() const;

  // True when x satisfies rows and bounds within tolerance and every
  // integral variable is within kIntegralityTolerance of an integer.
  bool IsFeasible(const std::vector<double>& x) const;
};

struct SolveLimits {
  double time_limit_s = kInfinity;
  std::int64_t node_limit = INT64_MAX;
  double abs_gap = 1e-6;
};

enum class MilpStatus { kOptimal, kInfeasible, kUnbounded, kTimeLimit };

const char* MilpStatusName(MilpStatus status);

struct MilpOutcome {
  MilpStatus status = MilpStatus::kInfeasible;
  bool has_incumbent = false;
  double objective = kInfinity;
  std::vector<double> x;
  double best_bound = -kInfinity;
  std::int64_t nodes = 0;
};

// Maps a node's LP solution to a candidate feasible point, or nullopt.
using RoundingHook =
    std::function<std::optional<std::vector<double>>(const std::vector<double>&)>;

struct MilpOptions {
  std::optional<std::vector<double>> initial_incumbent;
  RoundingHook rounding;
};

// Hitting the node limit reports kTimeLimit as well. NumericalFailure from
// the LP propagates.
MilpOutcome SolveMilp(const MilpModel& model, const SolveLimits& limits,
                      const MilpOptions& options = {});

}  // namespace rmc

#endif  // RMC_MILP_HPP_

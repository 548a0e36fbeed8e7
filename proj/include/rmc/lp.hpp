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

// Dense two-phase primal simplex with bounded variables.
//
// Minimizes c'x subject to rows (a_i'x {<=,>=,=} b_i) and l <= x <= u.
// Nonbasic variables rest at one of their bounds. Phase one minimizes the
// sum of artificial variables; in phase two the artificials are fixed to
// zero. Pricing is Dantzig's rule until a streak of degenerate pivots,
// after which Bland's rule takes over until the objective moves again.

#ifndef RMC_LP_HPP_
#define RMC_LP_HPP_

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace rmc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kFeasibilityTolerance = 1e-7;
inline constexpr double kObjectiveTolerance = 1e-7;

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearTerm {
  int var;
  double coef;
};

struct LinearRow {
  std::vector<LinearTerm> terms;
  Relation relation = Relation::kGreaterEqual;
  double rhs = 0.0;
};

class LpModel {
 public:
  int AddVariable(double cost, double lower = 0.0, double upper = kInfinity);
  int AddRow(std::vector<LinearTerm> terms, Relation relation, double rhs);

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  // Throws Error(kInvalidInstance) on dimension mismatch, non-finite data or
  // lower > upper.
  void Validate() const;

  // Value of a_i'x for row i.
  double RowActivity(int row, const std::vector<double>& x) const;
  double Objective(const std::vector<double>& x) const;
  // Largest bound or row violation of x.
  double MaxViolation(const std::vector<double>& x) const;

  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  // Row duals y with c - A'y = reduced costs; y_i >= 0 on >= rows and
  // y_i <= 0 on <= rows at optimality.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  int iterations = 0;
};

// Throws Error(kNumericalFailure) when the iteration cap is exceeded.
LpOutcome SolveLp(const LpModel& model);

// b'y plus the bound terms of the reduced costs; equals the primal objective
// at an optimal basis.
double DualObjective(const LpModel& model, const LpOutcome& outcome);

}  // namespace rmc

#endif  // RMC_LP_HPP_

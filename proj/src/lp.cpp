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

#include "rmc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rmc/core.hpp"

namespace rmc {

int LpModel::AddVariable(double cost, double lower_bound, double upper_bound) {
  objective.push_back(cost);
  lower.push_back(lower_bound);
  upper.push_back(upper_bound);
  return num_variables() - 1;
}

int LpModel::AddRow(std::vector<LinearTerm> terms, Relation relation,
                    double rhs) {
  rows.push_back({std::move(terms), relation, rhs});
  return num_rows() - 1;
}

void LpModel::Validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidInstance, "LP model: " + msg);
  };
  if (lower.size() != objective.size() || upper.size() != objective.size()) {
    fail("bound vectors do not match the objective length");
  }
  for (int j = 0; j < num_variables(); ++j) {
    if (!std::isfinite(objective[j])) fail("non-finite objective coefficient");
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
        lower[j] == kInfinity || upper[j] == -kInfinity) {
      std::ostringstream os;
      os << "bad bounds on variable " << j;
      fail(os.str());
    }
  }
  for (const auto& row : rows) {
    if (!std::isfinite(row.rhs)) fail("non-finite right-hand side");
    for (const auto& t : row.terms) {
      if (t.var < 0 || t.var >= num_variables()) fail("term index out of range");
      if (!std::isfinite(t.coef)) fail("non-finite coefficient");
    }
  }
}

double LpModel::RowActivity(int row, const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& t : rows[row].terms) s += t.coef * x[t.var];
  return s;
}

double LpModel::Objective(const std::vector<double>& x) const {
  double s = 0.0;
  for (int j = 0; j < num_variables(); ++j) s += objective[j] * x[j];
  return s;
}

double LpModel::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max({worst, lower[j] - x[j], x[j] - upper[j]});
  }
  for (int i = 0; i < num_rows(); ++i) {
    const double act = RowActivity(i, x);
    const double rhs = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual: worst = std::max(worst, act - rhs); break;
      case Relation::kGreaterEqual: worst = std::max(worst, rhs - act); break;
      case Relation::kEqual: worst = std::max(worst, std::abs(act - rhs)); break;
    }
  }
  return worst;
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kPricingTolerance = 1e-9;
constexpr int kDegenerateStreakForBland = 50;

enum class ColumnState { kBasic, kAtLower, kAtUpper };

// A tableau column maps back to a model variable as
//   x[var] += sign * value.
struct ColumnOrigin {
  int var = -1;  // -1 for slack and artificial columns
  double sign = 1.0;
};

class Simplex {
 public:
  explicit Simplex(const LpModel& model) : model_(model) {}

  LpOutcome Run();

 private:
  void BuildColumns();
  void BuildTableau();
  // Returns false when unbounded.
  bool Iterate(const std::vector<double>& cost);
  void Pivot(int row, int col);
  void RecomputeBasics();
  void ComputeReducedCosts(const std::vector<double>& cost);
  double Value(int col) const;

  const LpModel& model_;
  int m_ = 0;
  int n_ = 0;  // total columns including slacks and artificials
  std::vector<ColumnOrigin> origin_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<bool> artificial_;
  std::vector<std::vector<double>> a_;  // original column-space rows
  std::vector<double> b_;

  std::vector<std::vector<double>> t_;  // B^{-1} A, one extra rhs column
  std::vector<int> basis_;
  std::vector<ColumnState> state_;
  std::vector<double> xb_;
  std::vector<double> d_;
  // Unit column of each row in the starting basis and its coefficient.
  std::vector<int> unit_col_;
  std::vector<double> unit_coef_;
  int iterations_ = 0;
  int iteration_cap_ = 0;
};

void Simplex::BuildColumns() {
  const int nv = model_.num_variables();
  m_ = model_.num_rows();
  for (int j = 0; j < nv; ++j) {
    const double l = model_.lower[j];
    const double u = model_.upper[j];
    if (std::isfinite(l)) {
      origin_.push_back({j, 1.0});
      lo_.push_back(l);
      hi_.push_back(u);
    } else if (std::isfinite(u)) {
      // x = -x' with x' in [-u, inf)
      origin_.push_back({j, -1.0});
      lo_.push_back(-u);
      hi_.push_back(kInfinity);
    } else {
      origin_.push_back({j, 1.0});
      lo_.push_back(0.0);
      hi_.push_back(kInfinity);
      origin_.push_back({j, -1.0});
      lo_.push_back(0.0);
      hi_.push_back(kInfinity);
    }
  }
  artificial_.assign(origin_.size(), false);
  const int structural = static_cast<int>(origin_.size());
  a_.assign(m_, std::vector<double>(structural, 0.0));
  b_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    b_[i] = model_.rows[i].rhs;
  }
  // Scatter terms into structural columns.
  std::vector<std::vector<int>> cols_of_var(nv);
  for (int c = 0; c < structural; ++c) cols_of_var[origin_[c].var].push_back(c);
  for (int i = 0; i < m_; ++i) {
    for (const auto& term : model_.rows[i].terms) {
      for (int c : cols_of_var[term.var]) {
        a_[i][c] += origin_[c].sign * term.coef;
      }
    }
  }
}

void Simplex::BuildTableau() {
  const int structural = static_cast<int>(origin_.size());
  // Residual of each row with structurals at their lower bounds.
  std::vector<double> residual(m_);
  for (int i = 0; i < m_; ++i) {
    double s = 0.0;
    for (int c = 0; c < structural; ++c) s += a_[i][c] * lo_[c];
    residual[i] = b_[i] - s;
  }
  // Decide the starting unit column of every row.
  unit_col_.assign(m_, -1);
  unit_coef_.assign(m_, 1.0);
  std::vector<std::pair<int, double>> extra;  // (row, coef) per extra column
  std::vector<bool> extra_artificial;
  for (int i = 0; i < m_; ++i) {
    const Relation rel = model_.rows[i].relation;
    if (rel == Relation::kLessEqual && residual[i] >= 0.0) {
      extra.push_back({i, 1.0});
      extra_artificial.push_back(false);
    } else if (rel == Relation::kGreaterEqual && residual[i] <= 0.0) {
      extra.push_back({i, -1.0});
      extra_artificial.push_back(false);
    } else {
      if (rel == Relation::kLessEqual) {
        extra.push_back({i, 1.0});
        extra_artificial.push_back(false);
      } else if (rel == Relation::kGreaterEqual) {
        extra.push_back({i, -1.0});
        extra_artificial.push_back(false);
      }
      extra.push_back({i, residual[i] >= 0.0 ? 1.0 : -1.0});
      extra_artificial.push_back(true);
    }
  }
  n_ = structural + static_cast<int>(extra.size());
  for (std::size_t e = 0; e < extra.size(); ++e) {
    origin_.push_back({-1, 1.0});
    lo_.push_back(0.0);
    hi_.push_back(kInfinity);
    artificial_.push_back(extra_artificial[e]);
  }
  t_.assign(m_, std::vector<double>(n_ + 1, 0.0));
  for (int i = 0; i < m_; ++i) {
    std::copy(a_[i].begin(), a_[i].end(), t_[i].begin());
    t_[i][n_] = b_[i];
  }
  for (std::size_t e = 0; e < extra.size(); ++e) {
    const int col = structural + static_cast<int>(e);
    const auto [row, coef] = extra[e];
    t_[row][col] = coef;
    // The last extra column of a row is its starting basic column.
    unit_col_[row] = col;
    unit_coef_[row] = coef;
  }
  basis_.assign(m_, -1);
  state_.assign(n_, ColumnState::kAtLower);
  for (int i = 0; i < m_; ++i) {
    const int col = unit_col_[i];
    basis_[i] = col;
    state_[col] = ColumnState::kBasic;
    const double inv = 1.0 / unit_coef_[i];
    for (double& v : t_[i]) v *= inv;
  }
  RecomputeBasics();
}

double Simplex::Value(int col) const {
  switch (state_[col]) {
    case ColumnState::kAtLower: return lo_[col];
    case ColumnState::kAtUpper: return hi_[col];
    case ColumnState::kBasic: break;
  }
  for (int i = 0; i < m_; ++i) {
    if (basis_[i] == col) return xb_[i];
  }
  return 0.0;
}

void Simplex::RecomputeBasics() {
  xb_.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    double v = t_[i][n_];
    for (int c = 0; c < n_; ++c) {
      if (state_[c] == ColumnState::kBasic) continue;
      const double xc = state_[c] == ColumnState::kAtLower ? lo_[c] : hi_[c];
      if (xc != 0.0) v -= t_[i][c] * xc;
    }
    xb_[i] = v;
  }
}

void Simplex::ComputeReducedCosts(const std::vector<double>& cost) {
  d_ = cost;
  for (int i = 0; i < m_; ++i) {
    const double cb = cost[basis_[i]];
    if (cb == 0.0) continue;
    for (int c = 0; c < n_; ++c) d_[c] -= cb * t_[i][c];
  }
  for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
}

void Simplex::Pivot(int row, int col) {
  std::vector<double>& pr = t_[row];
  const double inv = 1.0 / pr[col];
  for (double& v : pr) v *= inv;
  pr[col] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == row) continue;
    const double f = t_[i][col];
    if (f == 0.0) continue;
    std::vector<double>& ri = t_[i];
    for (int c = 0; c <= n_; ++c) {
      if (pr[c] != 0.0) ri[c] -= f * pr[c];
    }
    ri[col] = 0.0;
  }
  const double f = d_[col];
  if (f != 0.0) {
    for (int c = 0; c < n_; ++c) {
      if (pr[c] != 0.0) d_[c] -= f * pr[c];
    }
    d_[col] = 0.0;
  }
  state_[basis_[row]] = ColumnState::kAtLower;  // caller fixes the side
  basis_[row] = col;
  state_[col] = ColumnState::kBasic;
}

bool Simplex::Iterate(const std::vector<double>& cost) {
  ComputeReducedCosts(cost);
  int degenerate_streak = 0;
  bool bland = false;
  while (true) {
    if (++iterations_ > iteration_cap_) {
      throw Error(ErrorCode::kNumericalFailure,
                  "simplex exceeded its iteration cap");
    }
    // Pricing.
    int enter = -1;
    double best = 0.0;
    for (int c = 0; c < n_; ++c) {
      if (state_[c] == ColumnState::kBasic || lo_[c] == hi_[c]) continue;
      double score = 0.0;
      if (state_[c] == ColumnState::kAtLower && d_[c] < -kPricingTolerance) {
        score = -d_[c];
      } else if (state_[c] == ColumnState::kAtUpper &&
                 d_[c] > kPricingTolerance) {
        score = d_[c];
      } else {
        continue;
      }
      if (bland) {
        enter = c;
        break;
      }
      if (score > best) {
        best = score;
        enter = c;
      }
    }
    if (enter < 0) return true;

    const double dir = state_[enter] == ColumnState::kAtLower ? 1.0 : -1.0;
    double step = hi_[enter] - lo_[enter];
    int leave = -1;
    bool leave_to_upper = false;
    double leave_alpha = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double alpha = dir * t_[i][enter];
      if (std::abs(alpha) < kPivotTolerance) continue;
      const int bc = basis_[i];
      double limit;
      bool to_upper;
      if (alpha > 0.0) {
        limit = (xb_[i] - lo_[bc]) / alpha;
        to_upper = false;
      } else {
        if (!std::isfinite(hi_[bc])) continue;
        limit = (hi_[bc] - xb_[i]) / -alpha;
        to_upper = true;
      }
      limit = std::max(limit, 0.0);
      bool take;
      if (limit < step - 1e-12) {
        take = true;
      } else if (leave < 0 || limit > step + 1e-12) {
        take = false;
      } else if (bland) {
        take = bc < basis_[leave];
      } else {
        take = std::abs(alpha) > std::abs(leave_alpha) ||
               (std::abs(alpha) == std::abs(leave_alpha) &&
                bc < basis_[leave]);
      }
      if (take) {
        step = limit;
        leave = i;
        leave_to_upper = to_upper;
        leave_alpha = alpha;
      }
    }
    if (leave < 0 && !std::isfinite(step)) return false;

    for (int i = 0; i < m_; ++i) {
      xb_[i] -= step * dir * t_[i][enter];
    }
    if (step < 1e-12) {
      if (++degenerate_streak >= kDegenerateStreakForBland) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }
    if (leave < 0) {
      state_[enter] = state_[enter] == ColumnState::kAtLower
                          ? ColumnState::kAtUpper
                          : ColumnState::kAtLower;
      continue;
    }
    const int leaving_col = basis_[leave];
    const double entering_value =
        (dir > 0 ? lo_[enter] : hi_[enter]) + dir * step;
    Pivot(leave, enter);
    state_[leaving_col] =
        leave_to_upper ? ColumnState::kAtUpper : ColumnState::kAtLower;
    xb_[leave] = entering_value;
    if (iterations_ % 64 == 0) RecomputeBasics();
  }
}

LpOutcome Simplex::Run() {
  model_.Validate();
  BuildColumns();
  LpOutcome out;
  for (std::size_t c = 0; c < lo_.size(); ++c) {
    if (lo_[c] > hi_[c]) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
  }
  BuildTableau();
  iteration_cap_ = 20000 + 50 * (m_ + n_);

  double scale = 1.0;
  for (double v : b_) scale = std::max(scale, std::abs(v));
  const double infeasibility_tol = kFeasibilityTolerance * scale;

  bool any_artificial = false;
  std::vector<double> phase_one(n_, 0.0);
  for (int c = 0; c < n_; ++c) {
    if (artificial_[c]) {
      phase_one[c] = 1.0;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    Iterate(phase_one);
    RecomputeBasics();
    double infeasibility = 0.0;
    for (int c = 0; c < n_; ++c) {
      if (artificial_[c]) infeasibility += Value(c);
    }
    out.iterations = iterations_;
    if (infeasibility > infeasibility_tol) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    for (int c = 0; c < n_; ++c) {
      if (artificial_[c]) hi_[c] = 0.0;
    }
    // Clamp basic artificials that ended at a tiny positive value.
    for (int i = 0; i < m_; ++i) {
      if (artificial_[basis_[i]]) xb_[i] = std::min(xb_[i], 0.0);
    }
  }

  std::vector<double> phase_two(n_, 0.0);
  for (int c = 0; c < n_; ++c) {
    if (origin_[c].var >= 0) {
      phase_two[c] = origin_[c].sign * model_.objective[origin_[c].var];
    }
  }
  const bool bounded = Iterate(phase_two);
  out.iterations = iterations_;
  if (!bounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  RecomputeBasics();

  out.status = LpStatus::kOptimal;
  out.x.assign(model_.num_variables(), 0.0);
  for (int c = 0; c < n_; ++c) {
    if (origin_[c].var >= 0) out.x[origin_[c].var] += origin_[c].sign * Value(c);
  }
  // Snap to bounds within tolerance.
  for (int j = 0; j < model_.num_variables(); ++j) {
    if (std::abs(out.x[j] - model_.lower[j]) < 1e-12) out.x[j] = model_.lower[j];
    if (std::abs(out.x[j] - model_.upper[j]) < 1e-12) out.x[j] = model_.upper[j];
  }
  out.objective = model_.Objective(out.x);
  out.duals.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    // y_i = (c_k - d_k) / u_i for the starting unit column k of row i.
    const int k = unit_col_[i];
    out.duals[i] = (phase_two[k] - d_[k]) / unit_coef_[i];
  }
  out.reduced_costs = model_.objective;
  for (int i = 0; i < m_; ++i) {
    for (const auto& t : model_.rows[i].terms) {
      out.reduced_costs[t.var] -= t.coef * out.duals[i];
    }
  }
  return out;
}

}  // namespace

LpOutcome SolveLp(const LpModel& model) {
  Simplex simplex(model);
  return simplex.Run();
}

double DualObjective(const LpModel& model, const LpOutcome& outcome) {
  double value = 0.0;
  for (int i = 0; i < model.num_rows(); ++i) {
    value += model.rows[i].rhs * outcome.duals[i];
  }
  for (int j = 0; j < model.num_variables(); ++j) {
    const double r = outcome.reduced_costs[j];
    if (r > 1e-9) {
      value += r * model.lower[j];
    } else if (r < -1e-9) {
      value += r * model.upper[j];
    }
  }
  return value;
}

}  // namespace rmc

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rmc/core.hpp"

namespace rmc {
namespace {

TEST_CASE("lp: single lower-bounded variable") {
  LpModel m;
  const int x = m.AddVariable(1.0);
  m.AddRow({{x, 1.0}}, Relation::kGreaterEqual, 2.0);
  const auto out = SolveLp(m);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(out.duals[0] == doctest::Approx(1.0));
}

TEST_CASE("lp: fractional optimum") {
  LpModel m;
  const int a = m.AddVariable(1.0);
  const int b = m.AddVariable(1.0);
  m.AddRow({{a, 1.0}, {b, 1.0}}, Relation::kGreaterEqual, 1.5);
  const auto out = SolveLp(m);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(std::abs(out.objective - 1.5) < kObjectiveTolerance);
}

TEST_CASE("lp: infeasible and unbounded") {
  LpModel m;
  const int x = m.AddVariable(1.0);
  m.AddRow({{x, 1.0}}, Relation::kGreaterEqual, 1.0);
  m.AddRow({{x, 1.0}}, Relation::kLessEqual, 0.0);
  CHECK(SolveLp(m).status == LpStatus::kInfeasible);

  LpModel u;
  const int y = u.AddVariable(-1.0);
  u.AddRow({{y, 1.0}}, Relation::kGreaterEqual, 1.0);
  CHECK(SolveLp(u).status == LpStatus::kUnbounded);
}

TEST_CASE("lp: equality rows, free and upper-bounded variables") {
  LpModel m;
  const int f = m.AddVariable(1.0, -kInfinity, kInfinity);
  const int g = m.AddVariable(-2.0, -kInfinity, 3.0);
  m.AddRow({{f, 1.0}, {g, 1.0}}, Relation::kEqual, 1.0);
  const auto out = SolveLp(m);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.x[g] == doctest::Approx(3.0));
  CHECK(out.x[f] == doctest::Approx(-2.0));
  CHECK(out.objective == doctest::Approx(-8.0));
}

TEST_CASE("lp: crossed bounds are rejected") {
  LpModel m;
  m.AddVariable(1.0, 2.0, 1.0);
  CHECK_THROWS_AS(SolveLp(m), Error);
}

TEST_CASE("lp: empty model") {
  LpModel m;
  const auto out = SolveLp(m);
  CHECK(out.status == LpStatus::kOptimal);
  CHECK(out.objective == 0.0);
}

// Random small LPs against vertex enumeration, plus duality and determinism.
TEST_CASE("lp: random models agree with vertex enumeration") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> nvars(1, 3);
  std::uniform_int_distribution<int> nrows(1, 4);
  std::uniform_int_distribution<int> rel(0, 2);
  int optimal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LpModel m;
    const int n = nvars(rng);
    for (int j = 0; j < n; ++j) {
      const double ub = (rng() % 3 == 0) ? kInfinity : 1.0 + rng() % 5;
      m.AddVariable(coef(rng), 0.0, ub);
    }
    const int rows = nrows(rng);
    for (int i = 0; i < rows; ++i) {
      std::vector<LinearTerm> terms;
      for (int j = 0; j < n; ++j) {
        const int c = coef(rng);
        if (c != 0) terms.push_back({j, static_cast<double>(c)});
      }
      m.AddRow(terms, static_cast<Relation>(rel(rng)), coef(rng) * 2);
    }
    const auto out = SolveLp(m);
    const auto oracle = testing::EnumerateLpVertices(m, 60.0);
    INFO("trial " << trial);
    if (!oracle.feasible) {
      CHECK(out.status == LpStatus::kInfeasible);
      continue;
    }
    if (out.status == LpStatus::kUnbounded) {
      // The oracle box cap makes unbounded models look bounded; the optimum
      // must then sit on the artificial box.
      CHECK(oracle.hits_box);
      continue;
    }
    REQUIRE(out.status == LpStatus::kOptimal);
    ++optimal;
    CHECK(std::abs(out.objective - oracle.objective) < kObjectiveTolerance);
    CHECK(m.MaxViolation(out.x) < kFeasibilityTolerance);
    CHECK(out.objective >= DualObjective(m, out) - kObjectiveTolerance);
    CHECK(std::abs(out.objective - DualObjective(m, out)) < 1e-6);
    for (int i = 0; i < m.num_rows(); ++i) {
      const auto r = m.rows[i].relation;
      if (r == Relation::kGreaterEqual) CHECK(out.duals[i] > -1e-9);
      if (r == Relation::kLessEqual) CHECK(out.duals[i] < 1e-9);
    }
    const auto again = SolveLp(m);
    CHECK(again.x == out.x);
  }
  CHECK(optimal > 100);
}

TEST_CASE("lp: degenerate covering model terminates") {
  // Many parallel covering rows produce heavy degeneracy.
  LpModel m;
  const int n = 6;
  for (int j = 0; j < n; ++j) m.AddVariable(1.0);
  for (int i = 0; i < 40; ++i) {
    std::vector<LinearTerm> terms;
    for (int j = 0; j < n; ++j) {
      if ((i + j) % 3 != 0) terms.push_back({j, 1.0});
    }
    m.AddRow(terms, Relation::kGreaterEqual, 1.0);
  }
  const auto out = SolveLp(m);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(m.MaxViolation(out.x) < kFeasibilityTolerance);
  CHECK(std::abs(out.objective - DualObjective(m, out)) < 1e-6);
}

}  // namespace
}  // namespace rmc

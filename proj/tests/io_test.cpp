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

#include "rmc/io.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"

namespace rmc {
namespace {

std::string ParseError(const std::string& text) {
  std::istringstream in(text);
  try {
    ParseInstance(in, "f");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
    return e.what();
  }
  return "";
}

TEST_CASE("instance text round trip") {
  const std::string text = InstanceToString(testing::InstA());
  CHECK(text ==
        "q 3\ngamma 4\nlocations 2\nregion 0 2\nregion 0 2\nregion 0 2\n"
        "edge 0 0\nedge 0 1\nedge 1 1\nedge 1 2\n");
  std::istringstream in(text);
  CHECK(ParseInstance(in) == testing::InstA());

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, {}, 0.5);
    std::istringstream again(InstanceToString(inst));
    const Instance parsed = ParseInstance(again);
    CHECK(parsed == inst);
    CHECK(InstanceToString(parsed) == InstanceToString(inst));
  }
}

TEST_CASE("instance parsing accepts comments and any line order") {
  std::istringstream in(
      "# header\n\nedge 1 0   # trailing\nregion 1 3\nlocations 2\n"
      "  gamma 2\nq 1\n");
  const Instance inst = ParseInstance(in);
  CHECK(inst.num_locations() == 2);
  CHECK(inst.num_regions() == 1);
  CHECK(inst.upper(0) == 3);
  CHECK(inst.num_edges() == 1);
}

TEST_CASE("instance parse errors carry positions") {
  CHECK(ParseError("q 3\nfoo 1\n") == "f:2:1: unknown key 'foo'");
  CHECK(ParseError("q x\n") == "f:1:3: expected an integer, got 'x'");
  CHECK(ParseError("q 3 4\n") == "f:1:5: unexpected token");
  CHECK(ParseError("q 3\nq 4\n") == "f:2:1: duplicate key 'q'");
  CHECK(ParseError("region 3 1\n") == "f:1:10: upper bound below lower bound");
  CHECK(ParseError("gamma 1\nlocations 1\n") == "f: missing required key 'q'");
  CHECK(ParseError("q 1\ngamma 1\nlocations 1\nregion 0 1\nedge 0 3\n") ==
        "f:5:6: region index out of range");
  CHECK(ParseError("q 1\ngamma 1\nlocations 1\nregion 0 1\nedge 0 0\nedge 0 0\n") ==
        "f:6:6: duplicate edge");
  CHECK(ParseError("q\n").find("f:1:2:") == 0);
}

TEST_CASE("weighted graph parsing") {
  std::istringstream in("nodes 3 facilities 0 2\nedge 0 1 1.5\nedge 1 2 2\n");
  const WeightedGraph g = ParseWeightedGraph(in);
  CHECK(g.num_nodes == 3);
  CHECK(g.facilities == std::vector<int>{0, 2});
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].weight == 1.5);

  auto fails = [](const std::string& text) {
    std::istringstream bad(text);
    CHECK_THROWS_AS(ParseWeightedGraph(bad), Error);
  };
  fails("edge 0 1 1\n");
  fails("nodes 2 facilities 0\nedge 0 1 -1\n");
  fails("nodes 2 facilities 3\n");
  fails("nodes 2 facilities 0 0\n");
  fails("nodes 2 facilities 0\nedge 0 1\n");
  fails("nodes 2\n");
}

TEST_CASE("count lists") {
  CHECK(ParseCountList("1,0,2") == std::vector<Count>{1, 0, 2});
  CHECK(ParseCountList("7") == std::vector<Count>{7});
  CHECK_THROWS_AS(ParseCountList(""), Error);
  CHECK_THROWS_AS(ParseCountList("1,,2"), Error);
  CHECK_THROWS_AS(ParseCountList("1,a"), Error);
}

}  // namespace
}  // namespace rmc

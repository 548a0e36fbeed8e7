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

// Text formats for instances and road graphs.
//
// Instance files are line oriented; '#' starts a comment:
//   q 3
//   gamma 4
//   locations 2
//   region 0 2        (one line per region, in index order: a b)
//   edge 0 1          (location region)
// Weighted graph files:
//   nodes 5 facilities 0 4
//   edge 0 1 2.5      (u v minutes)

#ifndef RMC_IO_HPP_
#define RMC_IO_HPP_

#include <iosfwd>
#include <string>

#include "rmc/core.hpp"
#include "rmc/instgen.hpp"

namespace rmc {

// Throws Error(kParseError) with "name:line:column: message". The result
// is validated but not normalized.
Instance ParseInstance(std::istream& in, const std::string& name = "<input>");
Instance ReadInstanceFile(const std::string& path);

// Canonical form: scalar keys, regions in order, edges sorted.
void WriteInstance(std::ostream& out, const Instance& inst);
std::string InstanceToString(const Instance& inst);

WeightedGraph ParseWeightedGraph(std::istream& in,
                                 const std::string& name = "<input>");
WeightedGraph ReadWeightedGraphFile(const std::string& path);

// Comma separated integers, e.g. "1,0,2". Throws Error(kParseError).
std::vector<Count> ParseCountList(const std::string& text);

}  // namespace rmc

#endif  // RMC_IO_HPP_

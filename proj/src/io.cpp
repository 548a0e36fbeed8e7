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

#include <cctype>
#include <charconv>
#include <fstream>
#include <locale>
#include <optional>
#include <sstream>
#include <vector>

namespace rmc {
namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

class LineReader {
 public:
  LineReader(std::istream& in, std::string name)
      : in_(in), name_(std::move(name)) {}

  // Next non-empty line split into tokens; false at end of input.
  bool Next(std::vector<Token>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      tokens.clear();
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos > start) {
          tokens.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
        }
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Fail(int column, const std::string& what) const {
    std::ostringstream os;
    os << name_ << ':' << line_ << ':' << column << ": " << what;
    throw Error(ErrorCode::kParseError, os.str());
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::string name_;
  int line_ = 0;
};

Count ToCount(const LineReader& r, const Token& t) {
  Count v = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    r.Fail(t.column, "expected an integer, got '" + t.text + "'");
  }
  return v;
}

double ToDouble(const LineReader& r, const Token& t) {
  std::istringstream is(t.text);
  is.imbue(std::locale::classic());
  double v = 0.0;
  is >> v;
  if (!is || is.peek() != EOF) {
    r.Fail(t.column, "expected a number, got '" + t.text + "'");
  }
  return v;
}

void Arity(const LineReader& r, const std::vector<Token>& tokens,
           std::size_t expected) {
  if (tokens.size() < expected) {
    r.Fail(tokens.back().column + static_cast<int>(tokens.back().text.size()),
           "'" + tokens[0].text + "' needs " + std::to_string(expected - 1) +
               " value(s)");
  }
  if (tokens.size() > expected) r.Fail(tokens[expected].column, "unexpected token");
}

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open file");
  return in;
}

}  // namespace

Instance ParseInstance(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  std::optional<Count> q, gamma, locations;
  std::vector<Count> a, b;
  struct EdgeAt {
    Edge edge;
    int line;
    int column;
  };
  std::vector<EdgeAt> edges;

  auto scalar = [&](std::optional<Count>& slot, const std::vector<Token>& t) {
    Arity(reader, t, 2);
    if (slot) reader.Fail(t[0].column, "duplicate key '" + t[0].text + "'");
    slot = ToCount(reader, t[1]);
    if (*slot < 0) reader.Fail(t[1].column, "value must be non-negative");
  };

  std::vector<Token> t;
  while (reader.Next(t)) {
    const std::string& key = t[0].text;
    if (key == "q") {
      scalar(q, t);
    } else if (key == "gamma") {
      scalar(gamma, t);
    } else if (key == "locations") {
      scalar(locations, t);
    } else if (key == "region") {
      Arity(reader, t, 3);
      const Count lo = ToCount(reader, t[1]);
      const Count hi = ToCount(reader, t[2]);
      if (lo < 0) reader.Fail(t[1].column, "lower bound must be non-negative");
      if (hi < lo) reader.Fail(t[2].column, "upper bound below lower bound");
      a.push_back(lo);
      b.push_back(hi);
    } else if (key == "edge") {
      Arity(reader, t, 3);
      const Count i = ToCount(reader, t[1]);
      const Count j = ToCount(reader, t[2]);
      if (i < 0 || i > INT32_MAX) reader.Fail(t[1].column, "bad location index");
      if (j < 0 || j > INT32_MAX) reader.Fail(t[2].column, "bad region index");
      edges.push_back({{static_cast<Index>(i), static_cast<Index>(j)},
                       reader.line(), t[1].column});
    } else {
      reader.Fail(t[0].column, "unknown key '" + key + "'");
    }
  }

  auto missing = [&](const char* key) {
    throw Error(ErrorCode::kParseError,
                name + ": missing required key '" + key + "'");
  };
  if (!q) missing("q");
  if (!gamma) missing("gamma");
  if (!locations) missing("locations");
  if (*q < 1) throw Error(ErrorCode::kParseError, name + ": q must be positive");

  std::vector<Edge> plain;
  std::vector<std::vector<char>> seen(*locations, std::vector<char>(a.size(), 0));
  for (const EdgeAt& e : edges) {
    std::ostringstream where;
    where << name << ':' << e.line << ':' << e.column << ": ";
    if (e.edge.location >= *locations) {
      throw Error(ErrorCode::kParseError, where.str() + "location index out of range");
    }
    if (e.edge.region >= static_cast<Index>(a.size())) {
      throw Error(ErrorCode::kParseError, where.str() + "region index out of range");
    }
    if (seen[e.edge.location][e.edge.region]++) {
      throw Error(ErrorCode::kParseError, where.str() + "duplicate edge");
    }
    plain.push_back(e.edge);
  }
  return Instance(*q, static_cast<Index>(*locations), std::move(a), std::move(b),
                  *gamma, std::move(plain));
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in = Open(path);
  return ParseInstance(in, path);
}

void WriteInstance(std::ostream& out, const Instance& inst) {
  out << "q " << inst.q() << '\n';
  out << "gamma " << inst.gamma() << '\n';
  out << "locations " << inst.num_locations() << '\n';
  for (Index j = 0; j < inst.num_regions(); ++j) {
    out << "region " << inst.lower(j) << ' ' << inst.upper(j) << '\n';
  }
  for (const Edge& e : inst.edges()) {
    out << "edge " << e.location << ' ' << e.region << '\n';
  }
}

std::string InstanceToString(const Instance& inst) {
  std::ostringstream os;
  WriteInstance(os, inst);
  return os.str();
}

WeightedGraph ParseWeightedGraph(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  WeightedGraph g;
  bool header = false;
  std::vector<Token> t;
  while (reader.Next(t)) {
    if (t[0].text == "nodes") {
      if (header) reader.Fail(t[0].column, "duplicate header");
      if (t.size() < 3 || t[2].text != "facilities") {
        reader.Fail(t[0].column, "expected 'nodes N facilities f1 f2 ...'");
      }
      const Count n = ToCount(reader, t[1]);
      if (n < 0 || n > INT32_MAX) reader.Fail(t[1].column, "bad node count");
      g.num_nodes = static_cast<int>(n);
      for (std::size_t k = 3; k < t.size(); ++k) {
        const Count f = ToCount(reader, t[k]);
        if (f < 0 || f >= n) reader.Fail(t[k].column, "facility out of range");
        g.facilities.push_back(static_cast<int>(f));
      }
      header = true;
    } else if (t[0].text == "edge") {
      if (!header) reader.Fail(t[0].column, "edge before the header");
      Arity(reader, t, 4);
      const Count u = ToCount(reader, t[1]);
      const Count v = ToCount(reader, t[2]);
      const double w = ToDouble(reader, t[3]);
      if (u < 0 || u >= g.num_nodes) reader.Fail(t[1].column, "node out of range");
      if (v < 0 || v >= g.num_nodes) reader.Fail(t[2].column, "node out of range");
      if (!(w >= 0.0)) reader.Fail(t[3].column, "weight must be non-negative");
      g.edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    } else {
      reader.Fail(t[0].column, "unknown key '" + t[0].text + "'");
    }
  }
  if (!header) throw Error(ErrorCode::kParseError, name + ": missing header");
  g.Validate();
  return g;
}

WeightedGraph ReadWeightedGraphFile(const std::string& path) {
  std::ifstream in = Open(path);
  return ParseWeightedGraph(in, path);
}

std::vector<Count> ParseCountList(const std::string& text) {
  std::vector<Count> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    Count v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParseError, "bad integer list '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace rmc

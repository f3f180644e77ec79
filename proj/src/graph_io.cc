// Copyright 2026 The pdslab Authors
//
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

#include "pdslab/graph_io.h"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <vector>

#include "pdslab/errors.h"

namespace pdslab {

GraphParseError::GraphParseError(int line, int column,
                                 const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> Tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

long long ParseInt(const Token& t, int line) {
  if (t.text.empty()) throw GraphParseError(line, t.column, "expected an integer");
  size_t pos = 0;
  bool negative = false;
  if (t.text[0] == '-' || t.text[0] == '+') {
    negative = t.text[0] == '-';
    pos = 1;
  }
  if (pos == t.text.size()) {
    throw GraphParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  }
  long long value = 0;
  for (; pos < t.text.size(); ++pos) {
    const char c = t.text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw GraphParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    }
    value = value * 10 + (c - '0');
    if (value > (1LL << 40)) throw GraphParseError(line, t.column, "integer too large");
  }
  return negative ? -value : value;
}

void ExpectCount(const std::vector<Token>& tokens, size_t count, int line,
                 const std::string& what) {
  if (tokens.size() < count) {
    const int col = tokens.empty() ? 1 : tokens.back().column +
                                             static_cast<int>(tokens.back().text.size());
    throw GraphParseError(line, col, "expected " + what);
  }
  if (tokens.size() > count) {
    throw GraphParseError(line, tokens[count].column, "unexpected token '" +
                                                          tokens[count].text + "'");
  }
}

}  // namespace

Graph ReadGraph(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int header_line = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = Tokenize(text);
    if (tokens.empty() || tokens.front().text[0] == '#') continue;
    if (n < 0) {
      ExpectCount(tokens, 2, line_no, "header 'n m'");
      n = ParseInt(tokens[0], line_no);
      m = ParseInt(tokens[1], line_no);
      if (n < 0) throw GraphParseError(line_no, tokens[0].column, "negative vertex count");
      if (m < 0) throw GraphParseError(line_no, tokens[1].column, "negative edge count");
      if (m > n * (n - 1) / 2) {
        throw GraphParseError(line_no, tokens[1].column, "more edges than vertex pairs");
      }
      header_line = line_no;
      continue;
    }
    ExpectCount(tokens, 2, line_no, "edge 'u v'");
    const long long u = ParseInt(tokens[0], line_no);
    const long long v = ParseInt(tokens[1], line_no);
    for (int t = 0; t < 2; ++t) {
      const long long id = t == 0 ? u : v;
      if (id < 0 || id >= n) {
        throw GraphParseError(line_no, tokens[t].column,
                              "vertex " + std::to_string(id) + " out of range [0, " +
                                  std::to_string(n) + ")");
      }
    }
    if (u == v) throw GraphParseError(line_no, tokens[0].column, "self-loop");
    const Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(key).second) {
      throw GraphParseError(line_no, tokens[0].column, "duplicate edge");
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw GraphParseError(line_no, 1, "more edge lines than the declared " +
                                            std::to_string(m));
    }
    edges.push_back(key);
  }
  if (n < 0) throw GraphParseError(line_no + 1, 1, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphParseError(line_no + 1, 1,
                          "expected " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()) + " (header on line " +
                              std::to_string(header_line) + ")");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph ReadDimacs(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1;
  std::set<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = Tokenize(text);
    if (tokens.empty() || tokens.front().text == "c") continue;
    const std::string& kind = tokens.front().text;
    if (kind == "p") {
      if (n >= 0) throw GraphParseError(line_no, 1, "second problem line");
      ExpectCount(tokens, 4, line_no, "'p edge n m'");
      if (tokens[1].text != "edge" && tokens[1].text != "col") {
        throw GraphParseError(line_no, tokens[1].column, "unsupported format '" +
                                                             tokens[1].text + "'");
      }
      n = ParseInt(tokens[2], line_no);
      ParseInt(tokens[3], line_no);
      if (n < 0) throw GraphParseError(line_no, tokens[2].column, "negative vertex count");
      continue;
    }
    if (kind == "e") {
      if (n < 0) throw GraphParseError(line_no, 1, "edge before problem line");
      ExpectCount(tokens, 3, line_no, "'e u v'");
      const long long u = ParseInt(tokens[1], line_no);
      const long long v = ParseInt(tokens[2], line_no);
      for (int t = 1; t <= 2; ++t) {
        const long long id = t == 1 ? u : v;
        if (id < 1 || id > n) {
          throw GraphParseError(line_no, tokens[t].column,
                                "vertex " + std::to_string(id) + " out of range [1, " +
                                    std::to_string(n) + "]");
        }
      }
      if (u == v) throw GraphParseError(line_no, tokens[1].column, "self-loop");
      edges.insert({static_cast<Vertex>(std::min(u, v) - 1),
                    static_cast<Vertex>(std::max(u, v) - 1)});
      continue;
    }
    throw GraphParseError(line_no, 1, "unknown line type '" + kind + "'");
  }
  if (n < 0) throw GraphParseError(line_no + 1, 1, "missing problem line");
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), list);
}

Graph ReadGraphFile(const std::string& path, bool dimacs) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return dimacs ? ReadDimacs(in) : ReadGraph(in);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string GraphDigest(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pdslab

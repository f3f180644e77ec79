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

#include "test_support.h"

#include <algorithm>
#include <queue>
#include <sstream>

#include "pdslab/graph_io.h"

namespace pdslab::testing {

bool NaiveIsPds(const Graph& g, const std::vector<int>& s) {
  const long n = g.num_vertices();
  const long k = static_cast<long>(s.size());
  if (k < 2 || k >= n) return false;
  std::vector<bool> in(n, false);
  for (int v : s) in[v] = true;
  for (int v : s) {
    long inside = 0;
    long total = 0;
    for (int w = 0; w < n; ++w) {
      if (w == v || !g.adjacent(v, w)) continue;
      ++total;
      if (in[w]) ++inside;
    }
    if (inside * (n - 1) < total * (k - 1)) return false;
  }
  return true;
}

bool NaiveInducesConnected(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<bool> in(g.num_vertices(), false);
  for (int v : s) in[v] = true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::queue<int> q;
  q.push(s.front());
  seen[s.front()] = true;
  size_t reached = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    ++reached;
    for (int w = 0; w < g.num_vertices(); ++w) {
      if (in[w] && !seen[w] && g.adjacent(v, w)) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return reached == s.size();
}

int NaiveMaxPds(const Graph& g, bool connected) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::vector<int> s = MaskMembers(mask, n);
    if (static_cast<int>(s.size()) <= best) continue;
    if (!NaiveIsPds(g, s)) continue;
    if (connected && !NaiveInducesConnected(g, s)) continue;
    best = static_cast<int>(s.size());
  }
  return best;
}

int NaiveMaxIndependentSet(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::vector<int> s = MaskMembers(mask, n);
    bool independent = true;
    for (size_t i = 0; i < s.size() && independent; ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (g.adjacent(s[i], s[j])) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

bool NaiveKnapsackFeasible(const KnapsackInstance& inst) {
  const int count = static_cast<int>(inst.items.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::int64_t value = 0, w1 = 0, w2 = 0;
    for (int i : MaskMembers(mask, count)) {
      value += inst.items[i].value;
      w1 += inst.items[i].w1;
      w2 += inst.items[i].w2;
    }
    if (value == inst.target && inst.cap1.Admits(w1) && inst.cap2.Admits(w2)) {
      return true;
    }
  }
  return false;
}

std::vector<int> MaskMembers(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

VertexSet MakeSet(int n, const std::vector<int>& members) {
  return VertexSet(n, members);
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ReadGraph(in);
}

}  // namespace pdslab::testing

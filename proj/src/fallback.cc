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

#include "pdslab/fallback.h"

#include <algorithm>
#include <deque>
#include <utility>

#include "pdslab/errors.h"
#include "pdslab/oracle.h"
#include "pdslab/pds.h"

namespace pdslab {

namespace {

constexpr long kMaxEvaluations = 200000;

// (unsatisfied members, total shortfall), smaller is better.
std::pair<int, std::int64_t> Score(const Graph& g, const VertexSet& s) {
  const std::int64_t n = g.num_vertices();
  const std::int64_t size = s.size();
  int unsatisfied = 0;
  std::int64_t deficit = 0;
  for (Vertex v : s.members()) {
    std::int64_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += s.contains(w);
    const std::int64_t outside = g.degree(v) - inside;
    const std::int64_t gap = outside * (size - 1) - inside * (n - size);
    if (gap > 0) {
      ++unsatisfied;
      deficit += gap;
    }
  }
  return {unsatisfied, deficit};
}

std::optional<VertexSet> HillClimb(const Graph& g, int size) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  VertexSet s(n);
  for (int i = 0; i < size; ++i) s.insert(order[i]);
  auto score = Score(g, s);
  long evaluations = 0;
  for (long swaps = 0; swaps < static_cast<long>(n) * n; ++swaps) {
    if (score.first == 0) return s;
    bool improved = false;
    for (Vertex out : s.members()) {
      for (Vertex in = 0; in < n && !improved; ++in) {
        if (s.contains(in)) continue;
        s.erase(out);
        s.insert(in);
        auto next = Score(g, s);
        if (next < score) {
          score = next;
          improved = true;
        } else {
          s.erase(in);
          s.insert(out);
        }
        if (++evaluations > kMaxEvaluations) return std::nullopt;
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  if (score.first == 0) return s;
  return std::nullopt;
}

SolveResult Finish(const Graph& g, VertexSet s, SolveMethod method,
                   bool connected) {
  SolveResult r;
  r.size = s.size();
  r.method = method;
  r.verified = connected ? IsConnectedPds(g, s) : IsPds(g, s);
  if (!r.verified) throw InternalError("fallback produced an invalid set");
  r.witness = std::move(s);
  return r;
}

}  // namespace

SolveResult FallbackHalfPds(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n < 3) throw PreconditionError("need at least 3 vertices");
  if (HasIsolatedVertex(g)) {
    throw PreconditionError("fallback requires a graph without isolated vertices");
  }
  const int half = HalfCeil(n);
  for (int size : {half, half + 1}) {
    if (size >= n) continue;
    if (auto s = HillClimb(g, size)) {
      return Finish(g, std::move(*s), SolveMethod::kFallback, false);
    }
  }
  if (n <= std::min(cap, kMaxOracleVertices)) {
    for (int size : {half, half + 1}) {
      if (size >= n) continue;
      OracleOptions options;
      options.cap = cap;
      options.min_size = size;
      options.max_size = size;
      SolveResult r = MaxPdsBruteforce(g, options);
      if (r.witness) {
        return Finish(g, std::move(*r.witness), SolveMethod::kFallback, false);
      }
    }
  }
  throw InternalError("no PDS of size ceil(n/2) or ceil(n/2)+1 found");
}

SolveResult ConnectedFallback(const Graph& g, int max_size, int cap) {
  const int n = g.num_vertices();
  if (n <= std::min(cap, kMaxOracleVertices)) {
    OracleOptions options;
    options.connected = true;
    options.cap = cap;
    options.max_size = max_size;
    return MaxPdsBruteforce(g, options);
  }
  std::optional<VertexSet> best;
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    const int lower = best ? best->size() + 1 : 2;
    const int upper = std::min<int>(max_size, order.size());
    for (int t = upper; t >= lower; --t) {
      VertexSet s(n, std::span<const Vertex>(order.data(), t));
      if (IsConnectedPds(g, s)) {
        best = std::move(s);
        break;
      }
    }
  }
  SolveResult r;
  r.method = SolveMethod::kFallback;
  if (best) return Finish(g, std::move(*best), SolveMethod::kFallback, true);
  return r;
}

SolveResult LargestComponentPds(const Graph& g, SolveMethod method) {
  const auto components = ConnectedComponents(g);
  const VertexSet* largest = &components.front();
  for (const VertexSet& c : components) {
    if (c.size() > largest->size()) largest = &c;
  }
  SolveResult r;
  r.method = method;
  if (largest->size() < 2 || largest->size() == g.num_vertices()) return r;
  return Finish(g, *largest, method, true);
}

}  // namespace pdslab

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

#include "pdslab/pds.h"

#include <string>

#include "pdslab/errors.h"

namespace pdslab {

namespace {

void CheckSetShape(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    throw PreconditionError("set universe does not match the graph");
  }
}

int InsideDegree(const Graph& g, const VertexSet& s, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += s.contains(w);
  return d;
}

}  // namespace

VertexVerdict EvaluateCounts(Vertex v, std::int64_t n, std::int64_t s,
                             std::int64_t inside, std::int64_t outside) {
  VertexVerdict out;
  out.vertex = v;
  out.inside_degree = static_cast<int>(inside);
  out.outside_degree = static_cast<int>(outside);
  const std::int64_t o = n - s;
  const std::int64_t d = inside + outside;
  out.form_a = {inside * o, outside * (s - 1)};
  out.form_b = {inside * (n - 1), d * (s - 1)};
  out.form_c = {d * o, outside * (n - 1)};
  out.satisfied = out.form_a.holds();
  if (out.form_b.holds() != out.satisfied ||
      out.form_c.holds() != out.satisfied) {
    throw InternalError("satisfaction forms disagree at vertex " +
                        std::to_string(v));
  }
  return out;
}

bool IsSatisfied(const Graph& g, const VertexSet& s, Vertex v) {
  CheckSetShape(g, s);
  const int n = g.num_vertices();
  if (s.size() < 2 || s.size() >= n) {
    throw PreconditionError("set size must satisfy 2 <= |S| < n");
  }
  if (!s.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " not in set");
  }
  const int inside = InsideDegree(g, s, v);
  return EvaluateCounts(v, n, s.size(), inside, g.degree(v) - inside)
      .satisfied;
}

SatisfactionReport Satisfaction(const Graph& g, const VertexSet& s) {
  CheckSetShape(g, s);
  const int n = g.num_vertices();
  if (s.size() < 2 || s.size() >= n) {
    throw PreconditionError("set size must satisfy 2 <= |S| < n");
  }
  SatisfactionReport report;
  for (Vertex v : s.members()) {
    const int inside = InsideDegree(g, s, v);
    report.verdicts.push_back(
        EvaluateCounts(v, n, s.size(), inside, g.degree(v) - inside));
    if (!report.verdicts.back().satisfied && !report.first_violation) {
      report.first_violation = v;
    }
  }
  return report;
}

bool IsPds(const Graph& g, const VertexSet& s) {
  CheckSetShape(g, s);
  const std::int64_t n = g.num_vertices();
  const std::int64_t size = s.size();
  if (size < 2 || size >= n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) continue;
    const std::int64_t inside = InsideDegree(g, s, v);
    const std::int64_t outside = g.degree(v) - inside;
    if (inside * (n - size) < outside * (size - 1)) return false;
  }
  return true;
}

bool IsConnectedPds(const Graph& g, const VertexSet& s) {
  return IsPds(g, s) && InducesConnected(g, s);
}

bool CheckLowDegreeClosure(const Graph& g, const VertexSet& s) {
  CheckSetShape(g, s);
  const std::int64_t n = g.num_vertices();
  const std::int64_t o = n - s.size();
  for (Vertex u : s.members()) {
    if (g.degree(u) * o >= n - 1) continue;
    for (Vertex w : g.neighbors(u)) {
      if (!s.contains(w)) return false;
    }
  }
  return true;
}

bool CoDominationCheck(const Graph& g, const VertexSet& s) {
  CheckSetShape(g, s);
  const int n = g.num_vertices();
  if (s.size() < HalfCeil(n) + 1 || s.size() >= n) {
    throw PreconditionError(
        "domination view needs ceil(n/2) + 1 <= |S| < n");
  }
  const Graph h = Complement(g);
  const HubPair hubs = SelectHubs(h);
  for (Vertex hub : {hubs.u, hubs.v}) {
    if (s.contains(hub) && !IsSatisfied(g, s, hub)) return false;
  }
  for (Vertex v : s.members()) {
    if (h.degree(v) == 0) continue;
    bool covered = false;
    for (Vertex w : h.neighbors(v)) {
      if (!s.contains(w)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace pdslab

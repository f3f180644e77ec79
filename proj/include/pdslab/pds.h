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

#ifndef PDSLAB_PDS_H_
#define PDSLAB_PDS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pdslab/graph.h"
#include "pdslab/vertex_set.h"

namespace pdslab {

inline int HalfCeil(int n) { return (n + 1) / 2; }

// lhs >= rhs, both sides cross-multiplied to exact integers.
struct FormComparison {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs >= rhs; }
};

// For v in S with s = |S|, o = n - s:
//   form_a: d_S(v) * o       >= d_out(v) * (s - 1)
//   form_b: d_S(v) * (n - 1) >= d(v) * (s - 1)
//   form_c: d(v) * o         >= d_out(v) * (n - 1)
struct VertexVerdict {
  Vertex vertex = -1;
  int inside_degree = 0;
  int outside_degree = 0;
  FormComparison form_a;
  FormComparison form_b;
  FormComparison form_c;
  bool satisfied = false;
};

struct SatisfactionReport {
  std::vector<VertexVerdict> verdicts;
  std::optional<Vertex> first_violation;
  bool all_satisfied() const { return !first_violation.has_value(); }
};

// Evaluates the three forms from raw counts. Throws InternalError if they
// disagree.
VertexVerdict EvaluateCounts(Vertex v, std::int64_t n, std::int64_t s,
                             std::int64_t inside, std::int64_t outside);

// Requires v in s and 2 <= |s| < n.
bool IsSatisfied(const Graph& g, const VertexSet& s, Vertex v);
SatisfactionReport Satisfaction(const Graph& g, const VertexSet& s);

bool IsPds(const Graph& g, const VertexSet& s);
bool IsConnectedPds(const Graph& g, const VertexSet& s);

// For a PDS s: every u in s with d(u) * (n - |s|) < n - 1 has N(u) in s.
bool CheckLowDegreeClosure(const Graph& g, const VertexSet& s);

// With h of the complement at most 2 and |s| >= ceil(n/2) + 1: the hubs
// of the complement that lie in s are satisfied and every non-universal
// vertex of s has a non-neighbour outside s.
bool CoDominationCheck(const Graph& g, const VertexSet& s);

}  // namespace pdslab

#endif  // PDSLAB_PDS_H_

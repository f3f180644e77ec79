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

#ifndef PDSLAB_REDUCTIONS_H_
#define PDSLAB_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdslab/graph.h"
#include "pdslab/vertex_set.h"

namespace pdslab {

enum class GadgetFamily { kSparse, kSparseBipartite, kDenseDelta6, kDenseDegen2 };

std::string_view ToString(GadgetFamily f);
std::optional<GadgetFamily> ParseGadgetFamily(std::string_view name);

struct GadgetParams {
  GadgetFamily family = GadgetFamily::kSparse;
  std::int64_t c = 0;        // sparse: lower bound on N
  std::int64_t n_prime = 0;  // gadget vertex count
  std::int64_t k_prime = 0;
  std::int64_t a = 0;        // sparse: length of the A path
  std::int64_t b = 0;        // sparse: length of the B path
  std::int64_t x = 0;        // degen2: copies per edge
};

// Sparse family parameters. C = max{4(n + 3m), 8n + 1, 2n + 2m}; N is the
// smallest N > C with 3N + 1 divisible by 4; k' = (3N + 1) / 4;
// A = k' - m - (n - k); B = (N - 1) / 4 - k. Requires 3 <= k < n and
// m <= n(n - 1) / 2. Throws InternalError if a defining inequality fails.
GadgetParams SparseGadgetParams(int n, int m, int k);

// Each violated inequality of the sparse family, as text.
std::vector<std::string> SparseParamViolations(const GadgetParams& p, int n,
                                               int m, int k);

// (xm + k - 1 - 3x)(n - k + 2) >= (n - k)(xm + k - 1) with x = n - k + 3.
bool Degen2MarginHolds(std::int64_t n, std::int64_t m, std::int64_t k);

enum class RoleKind { kSourceVertex, kEdgeVertex, kPathA, kPathB, kAStar, kBStar };

struct VertexRole {
  RoleKind kind = RoleKind::kSourceVertex;
  // Source vertex, source edge index or path position.
  int index = 0;
  // Edge copy number for the degen2 family.
  int copy = 0;
};

std::string RoleLabel(const VertexRole& role);

struct ReductionOutput {
  Graph gadget;
  std::int64_t k_prime = 0;
  std::vector<VertexRole> roles;
  GadgetParams params;
  Graph source;
  int k = 0;
  bool permissive = false;
};

bool IsCubic(const Graph& g);

// Copies of V, one vertex per edge tied to its endpoints and to two
// private vertices of path A, each vertex copy tied to a private vertex of
// path B. The bipartite variant attaches only every second path vertex.
// Requires g cubic.
ReductionOutput ReduceSparse(const Graph& g, int k, bool bipartite);

// V plus one vertex per edge; the complement has a triangle per edge and
// maximum degree 6. Requires g cubic unless permissive.
ReductionOutput ReduceDenseDelta6(const Graph& g, int k, bool permissive = false);

// V, x = n - k + 3 copies per edge and two extra vertices; the complement
// is bipartite of degeneracy 2. Requires g cubic and 4 <= k <= n.
ReductionOutput ReduceDenseDegen2(const Graph& g, int k);

// Image of an independent set of size exactly k: a PDS of size k'.
VertexSet ForwardMap(const ReductionOutput& r, const VertexSet& independent_set);

// Independent set of size >= k recovered from a PDS of size >= k'. Throws
// InternalError if the recovered set is not independent or too small.
VertexSet BackwardMap(const ReductionOutput& r, const VertexSet& pds);

// Rebuilds the expected adjacency from the roles and checks sizes and the
// degree, degeneracy and bipartiteness targets of the family. Returns the
// list of violations.
std::vector<std::string> AuditGadget(const ReductionOutput& r);

}  // namespace pdslab

#endif  // PDSLAB_REDUCTIONS_H_

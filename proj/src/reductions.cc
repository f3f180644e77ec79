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

#include "pdslab/reductions.h"

#include <algorithm>

#include "pdslab/errors.h"
#include "pdslab/pds.h"

namespace pdslab {

namespace {

int SparseStep(const ReductionOutput& r) {
  return r.params.family == GadgetFamily::kSparseBipartite ? 2 : 1;
}

bool Endpoint(const Graph& g, int edge, Vertex v) {
  const Edge& e = g.edges()[edge];
  return e.first == v || e.second == v;
}

bool SparseAdjacent(const ReductionOutput& r, const VertexRole& x,
                    const VertexRole& y) {
  const int step = SparseStep(r);
  if (x.kind == y.kind) {
    if (x.kind == RoleKind::kPathA || x.kind == RoleKind::kPathB) {
      return std::abs(x.index - y.index) == 1;
    }
    return false;
  }
  if (x.kind == RoleKind::kEdgeVertex && y.kind == RoleKind::kPathA) {
    return y.index == 2 * x.index * step || y.index == (2 * x.index + 1) * step;
  }
  if (x.kind == RoleKind::kEdgeVertex && y.kind == RoleKind::kSourceVertex) {
    return Endpoint(r.source, x.index, y.index);
  }
  if (x.kind == RoleKind::kSourceVertex && y.kind == RoleKind::kPathB) {
    return y.index == x.index * step;
  }
  return false;
}

// Adjacency in the complement of the dense gadgets.
bool DenseComplementAdjacent(const ReductionOutput& r, const VertexRole& x,
                             const VertexRole& y) {
  const bool delta6 = r.params.family == GadgetFamily::kDenseDelta6;
  if (x.kind == RoleKind::kSourceVertex && y.kind == RoleKind::kSourceVertex) {
    return delta6 && r.source.adjacent(x.index, y.index);
  }
  if (x.kind == RoleKind::kEdgeVertex && y.kind == RoleKind::kSourceVertex) {
    return Endpoint(r.source, x.index, y.index);
  }
  if ((x.kind == RoleKind::kAStar || x.kind == RoleKind::kBStar) &&
      y.kind == RoleKind::kSourceVertex) {
    return true;
  }
  return false;
}

bool ExpectedAdjacent(const ReductionOutput& r, const VertexRole& x,
                      const VertexRole& y) {
  switch (r.params.family) {
    case GadgetFamily::kSparse:
    case GadgetFamily::kSparseBipartite:
      return SparseAdjacent(r, x, y) || SparseAdjacent(r, y, x);
    case GadgetFamily::kDenseDelta6:
    case GadgetFamily::kDenseDegen2:
      return !(DenseComplementAdjacent(r, x, y) ||
               DenseComplementAdjacent(r, y, x));
  }
  return false;
}

// Builds the gadget from the roles and the family's adjacency rule.
Graph BuildFromRoles(const ReductionOutput& r) {
  const int size = static_cast<int>(r.roles.size());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < size; ++a) {
    for (Vertex b = a + 1; b < size; ++b) {
      if (ExpectedAdjacent(r, r.roles[a], r.roles[b])) edges.emplace_back(a, b);
    }
  }
  return Graph(size, edges);
}

void CheckK(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi) {
    throw PreconditionError(std::string(what) + ": k must lie in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "]");
  }
}

void RequireCubic(const Graph& g) {
  if (!IsCubic(g)) throw PreconditionError("source graph must be cubic");
}

}  // namespace

std::string_view ToString(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::kSparse: return "sparse";
    case GadgetFamily::kSparseBipartite: return "sparse-bipartite";
    case GadgetFamily::kDenseDelta6: return "dense-delta6";
    case GadgetFamily::kDenseDegen2: return "dense-degen2";
  }
  return "?";
}

std::optional<GadgetFamily> ParseGadgetFamily(std::string_view name) {
  for (GadgetFamily f :
       {GadgetFamily::kSparse, GadgetFamily::kSparseBipartite,
        GadgetFamily::kDenseDelta6, GadgetFamily::kDenseDegen2}) {
    if (ToString(f) == name) return f;
  }
  return std::nullopt;
}

std::string RoleLabel(const VertexRole& role) {
  switch (role.kind) {
    case RoleKind::kSourceVertex: return "g" + std::to_string(role.index);
    case RoleKind::kEdgeVertex:
      return role.copy > 0 ? "e" + std::to_string(role.index) + "." +
                                 std::to_string(role.copy)
                           : "e" + std::to_string(role.index);
    case RoleKind::kPathA: return "a" + std::to_string(role.index);
    case RoleKind::kPathB: return "b" + std::to_string(role.index);
    case RoleKind::kAStar: return "a*";
    case RoleKind::kBStar: return "b*";
  }
  return "?";
}

bool IsCubic(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

std::vector<std::string> SparseParamViolations(const GadgetParams& p, int n,
                                               int m, int k) {
  std::vector<std::string> out;
  auto check = [&](bool ok, const char* text) {
    if (!ok) out.emplace_back(text);
  };
  const std::int64_t big_n = p.n_prime;
  const std::int64_t kp = p.k_prime;
  check(p.a > 2 * static_cast<std::int64_t>(m), "A > 2m");
  check(p.b > n, "B > n");
  check(kp + p.a > big_n, "k' + A > N");
  check(2 * (big_n - kp) < kp - 1, "2(N - k') < k' - 1");
  check(3 * (big_n - kp) >= kp - 1, "3(N - k') >= k' - 1");
  check(3 * (big_n - kp - 1) < kp, "3(N - k' - 1) < k'");
  check(kp == p.a + m + (n - k), "k' = A + m + n - k");
  check(big_n == p.a + p.b + m + n, "N = A + B + m + n");
  check(big_n < p.c + 5, "N < C + 5");
  return out;
}

GadgetParams SparseGadgetParams(int n, int m, int k) {
  if (k < 3 || k >= n) throw PreconditionError("k must satisfy 3 <= k < n");
  if (m < 0 || static_cast<std::int64_t>(m) * 2 > static_cast<std::int64_t>(n) * (n - 1)) {
    throw PreconditionError("edge count out of range");
  }
  GadgetParams p;
  p.family = GadgetFamily::kSparse;
  const std::int64_t nn = n;
  const std::int64_t mm = m;
  p.c = std::max({4 * (nn + 3 * mm), 8 * nn + 1, 2 * nn + 2 * mm});
  p.n_prime = p.c + 1;
  while ((3 * p.n_prime + 1) % 4 != 0) ++p.n_prime;
  p.k_prime = (3 * p.n_prime + 1) / 4;
  p.a = p.k_prime - mm - (nn - k);
  p.b = (p.n_prime - 1) / 4 - k;
  const auto violations = SparseParamViolations(p, n, m, k);
  if (!violations.empty()) {
    throw InternalError("sparse gadget parameters violate " + violations.front());
  }
  return p;
}

bool Degen2MarginHolds(std::int64_t n, std::int64_t m, std::int64_t k) {
  const std::int64_t x = n - k + 3;
  return (x * m + k - 1 - 3 * x) * (n - k + 2) >= (n - k) * (x * m + k - 1);
}

ReductionOutput ReduceSparse(const Graph& g, int k, bool bipartite) {
  RequireCubic(g);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  ReductionOutput r;
  r.params = SparseGadgetParams(n, m, k);
  r.params.family =
      bipartite ? GadgetFamily::kSparseBipartite : GadgetFamily::kSparse;
  r.k_prime = r.params.k_prime;
  r.source = g;
  r.k = k;
  const int step = bipartite ? 2 : 1;
  if ((2 * m - 1) * step >= r.params.a || (n - 1) * step >= r.params.b) {
    throw InternalError("paths too short for the attachments");
  }
  for (int i = 0; i < n; ++i) r.roles.push_back({RoleKind::kSourceVertex, i, 0});
  for (int j = 0; j < m; ++j) r.roles.push_back({RoleKind::kEdgeVertex, j, 0});
  for (int i = 0; i < r.params.a; ++i) r.roles.push_back({RoleKind::kPathA, i, 0});
  for (int i = 0; i < r.params.b; ++i) r.roles.push_back({RoleKind::kPathB, i, 0});

  const int base_e = n;
  const int base_a = n + m;
  const int base_b = n + m + static_cast<int>(r.params.a);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < r.params.a; ++i) edges.emplace_back(base_a + i, base_a + i + 1);
  for (int i = 0; i + 1 < r.params.b; ++i) edges.emplace_back(base_b + i, base_b + i + 1);
  for (int j = 0; j < m; ++j) {
    const auto [u, v] = g.edges()[j];
    edges.emplace_back(base_e + j, u);
    edges.emplace_back(base_e + j, v);
    edges.emplace_back(base_e + j, base_a + 2 * j * step);
    edges.emplace_back(base_e + j, base_a + (2 * j + 1) * step);
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(i, base_b + i * step);
  r.gadget = Graph(static_cast<int>(r.roles.size()), edges);
  return r;
}

ReductionOutput ReduceDenseDelta6(const Graph& g, int k, bool permissive) {
  if (!permissive) RequireCubic(g);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  CheckK(k, 1, n, "dense-delta6");
  ReductionOutput r;
  r.params.family = GadgetFamily::kDenseDelta6;
  r.params.n_prime = n + m;
  r.params.k_prime = m + k;
  r.k_prime = r.params.k_prime;
  r.source = g;
  r.k = k;
  r.permissive = permissive;
  for (int i = 0; i < n; ++i) r.roles.push_back({RoleKind::kSourceVertex, i, 0});
  for (int j = 0; j < m; ++j) r.roles.push_back({RoleKind::kEdgeVertex, j, 0});
  std::vector<Edge> co_edges;
  for (auto [u, v] : g.edges()) co_edges.emplace_back(u, v);
  for (int j = 0; j < m; ++j) {
    co_edges.emplace_back(g.edges()[j].first, n + j);
    co_edges.emplace_back(g.edges()[j].second, n + j);
  }
  r.gadget = Complement(Graph(n + m, co_edges));
  return r;
}

ReductionOutput ReduceDenseDegen2(const Graph& g, int k) {
  RequireCubic(g);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  CheckK(k, 4, n, "dense-degen2");
  ReductionOutput r;
  r.params.family = GadgetFamily::kDenseDegen2;
  r.params.x = n - k + 3;
  const int x = static_cast<int>(r.params.x);
  r.params.n_prime = static_cast<std::int64_t>(x) * m + n + 2;
  r.params.k_prime = static_cast<std::int64_t>(x) * m + k;
  r.k_prime = r.params.k_prime;
  r.source = g;
  r.k = k;
  for (int i = 0; i < n; ++i) r.roles.push_back({RoleKind::kSourceVertex, i, 0});
  for (int j = 0; j < m; ++j) {
    for (int c = 1; c <= x; ++c) r.roles.push_back({RoleKind::kEdgeVertex, j, c});
  }
  r.roles.push_back({RoleKind::kAStar, 0, 0});
  r.roles.push_back({RoleKind::kBStar, 0, 0});
  const int size = static_cast<int>(r.roles.size());
  std::vector<Edge> co_edges;
  for (int j = 0; j < m; ++j) {
    for (int c = 0; c < x; ++c) {
      co_edges.emplace_back(g.edges()[j].first, n + j * x + c);
      co_edges.emplace_back(g.edges()[j].second, n + j * x + c);
    }
  }
  for (int i = 0; i < n; ++i) {
    co_edges.emplace_back(i, size - 2);
    co_edges.emplace_back(i, size - 1);
  }
  r.gadget = Complement(Graph(size, co_edges));
  return r;
}

VertexSet ForwardMap(const ReductionOutput& r, const VertexSet& independent_set) {
  const Graph& g = r.source;
  if (independent_set.universe() != g.num_vertices()) {
    throw PreconditionError("set universe does not match the source graph");
  }
  if (!IsIndependentSet(g, independent_set)) {
    throw PreconditionError("input set is not independent");
  }
  if (independent_set.size() != r.k) {
    throw PreconditionError("independent set must have exactly k = " +
                            std::to_string(r.k) + " vertices");
  }
  VertexSet s(r.gadget.num_vertices());
  for (Vertex x = 0; x < r.gadget.num_vertices(); ++x) {
    const VertexRole& role = r.roles[x];
    switch (role.kind) {
      case RoleKind::kSourceVertex: {
        const bool in_i = independent_set.contains(role.index);
        const bool sparse = r.params.family == GadgetFamily::kSparse ||
                            r.params.family == GadgetFamily::kSparseBipartite;
        if (sparse != in_i) s.insert(x);
        break;
      }
      case RoleKind::kEdgeVertex:
      case RoleKind::kPathA:
        s.insert(x);
        break;
      default:
        break;
    }
  }
  if (s.size() != r.k_prime || !IsPds(r.gadget, s)) {
    throw InternalError("forward map did not produce a PDS of size k'");
  }
  return s;
}

VertexSet BackwardMap(const ReductionOutput& r, const VertexSet& pds) {
  if (pds.universe() != r.gadget.num_vertices()) {
    throw PreconditionError("set universe does not match the gadget");
  }
  if (pds.size() < r.k_prime || !IsPds(r.gadget, pds)) {
    throw PreconditionError("input must be a PDS of size at least k'");
  }
  const Graph& g = r.source;
  const int n = g.num_vertices();
  VertexSet s = pds;
  if (r.params.family == GadgetFamily::kDenseDelta6) {
    // Trade a vertex copy for the copy of one of its edges.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = 0; j < g.num_edges(); ++j) {
        for (Vertex w : {g.edges()[j].first, g.edges()[j].second}) {
          if (s.contains(w) && !s.contains(n + j)) {
            s.erase(w);
            s.insert(n + j);
            changed = true;
          }
        }
      }
    }
  }
  VertexSet out(n);
  const bool sparse = r.params.family == GadgetFamily::kSparse ||
                      r.params.family == GadgetFamily::kSparseBipartite;
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v) != sparse) out.insert(v);
  }
  if (!IsIndependentSet(g, out) || out.size() < r.k) {
    throw InternalError("backward map did not recover an independent set of size k");
  }
  return out;
}

std::vector<std::string> AuditGadget(const ReductionOutput& r) {
  std::vector<std::string> out;
  const int size = r.gadget.num_vertices();
  if (static_cast<int>(r.roles.size()) != size) {
    out.push_back("role count differs from vertex count");
    return out;
  }
  if (size != r.params.n_prime) out.push_back("vertex count differs from N");
  if (BuildFromRoles(r) != r.gadget) out.push_back("edge set differs from construction");
  const int n = r.source.num_vertices();
  const int m = r.source.num_edges();
  switch (r.params.family) {
    case GadgetFamily::kSparse:
    case GadgetFamily::kSparseBipartite: {
      for (const std::string& v : SparseParamViolations(r.params, n, m, r.k)) {
        out.push_back("parameter " + v);
      }
      const GraphParams p = ComputeParams(r.gadget);
      if (p.max_degree != 4) out.push_back("max degree is not 4");
      if (p.degeneracy != 2) out.push_back("degeneracy is not 2");
      if (r.params.family == GadgetFamily::kSparseBipartite &&
          !TwoColoring(r.gadget)) {
        out.push_back("bipartite variant is not 2-colourable");
      }
      break;
    }
    case GadgetFamily::kDenseDelta6: {
      if (r.k_prime != m + r.k) out.push_back("k' differs from m + k");
      if (!r.permissive && ComputeParams(Complement(r.gadget)).max_degree != 6) {
        out.push_back("complement max degree is not 6");
      }
      break;
    }
    case GadgetFamily::kDenseDegen2: {
      if (r.k_prime != r.params.x * m + r.k) out.push_back("k' differs from xm + k");
      const Graph h = Complement(r.gadget);
      if (ComputeParams(h).degeneracy != 2) out.push_back("complement degeneracy is not 2");
      if (!TwoColoring(h)) out.push_back("complement is not bipartite");
      break;
    }
  }
  return out;
}

}  // namespace pdslab

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

#include "pdslab/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pdslab/errors.h"

namespace pdslab {

Graph::Graph(int n) : Graph(n, std::span<const Edge>()) {}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  words_ = (n + 63) / 64;
  adj_.assign(n, {});
  matrix_.assign(static_cast<size_t>(n) * words_, 0);
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw PreconditionError("edge (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw PreconditionError("self-loop at vertex " + std::to_string(a));
    }
    if (adjacent(a, b)) {
      throw PreconditionError("duplicate edge (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
    }
    matrix_[static_cast<size_t>(a) * words_ + b / 64] |= 1ULL << (b % 64);
    matrix_[static_cast<size_t>(b) * words_ + a / 64] |= 1ULL << (a % 64);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return (matrix_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

Graph Complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const int shift = a.num_vertices();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(shift + b.num_vertices(), edges);
}

int HIndex(const Graph& g) {
  std::vector<int> degrees;
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  int h = 0;
  while (h < static_cast<int>(degrees.size()) && degrees[h] >= h + 1) ++h;
  return h;
}

GraphParams ComputeParams(const Graph& g) {
  GraphParams p;
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) p.max_degree = std::max(p.max_degree, g.degree(v));
  p.h_index = HIndex(g);

  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    p.degeneracy = std::max(p.degeneracy, d);
    p.elimination_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return p;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool IsConnected(const Graph& g) {
  return g.num_vertices() > 0 && ConnectedComponents(g).size() == 1;
}

bool InducesConnected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  const std::vector<Vertex> members = s.members();
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = true;
  int reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w) && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

bool IsIndependentSet(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) return false;
  }
  return true;
}

bool HasIsolatedVertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

std::optional<std::vector<int>> TwoColoring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

HubPair SelectHubs(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw PreconditionError("hub selection needs at least 2 vertices");
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return {order[0], order[1]};
}

namespace {

AttachCase ClassifyPath(const Graph& g, HubPair hubs,
                        std::vector<Vertex>& path) {
  auto to_u = [&](Vertex x) { return g.adjacent(x, hubs.u); };
  auto to_v = [&](Vertex x) { return g.adjacent(x, hubs.v); };
  if (path.size() == 1) {
    const Vertex x = path.front();
    if (to_u(x) && to_v(x)) return AttachCase::kVI;
    if (to_u(x)) return AttachCase::kII;
    if (to_v(x)) return AttachCase::kIV;
    return AttachCase::kI;
  }
  const bool first_attached = to_u(path.front()) || to_v(path.front());
  const bool last_attached = to_u(path.back()) || to_v(path.back());
  if (!first_attached && last_attached) {
    std::reverse(path.begin(), path.end());
  }
  const Vertex a = path.front();
  const Vertex b = path.back();
  if (!to_u(a) && !to_v(a)) return AttachCase::kI;
  const bool b_attached = to_u(b) || to_v(b);
  if (to_u(a)) {
    if (!b_attached) return AttachCase::kII;
    return to_u(b) ? AttachCase::kIII : AttachCase::kVI;
  }
  if (!b_attached) return AttachCase::kIV;
  return to_v(b) ? AttachCase::kV : AttachCase::kVII;
}

}  // namespace

std::vector<TypedPathComponent> DecomposeDegree2(const Graph& g,
                                                 HubPair hubs) {
  const int n = g.num_vertices();
  if (hubs.u < 0 || hubs.u >= n || hubs.v < 0 || hubs.v >= n ||
      hubs.u == hubs.v) {
    throw PreconditionError("invalid hub pair");
  }
  auto is_hub = [&](Vertex x) { return x == hubs.u || x == hubs.v; };
  for (Vertex x = 0; x < n; ++x) {
    if (!is_hub(x) && g.degree(x) > 2) {
      throw PreconditionError("vertex " + std::to_string(x) +
                              " outside the hubs has degree " +
                              std::to_string(g.degree(x)));
    }
  }
  auto inner_neighbors = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(x)) {
      if (!is_hub(w)) out.push_back(w);
    }
    return out;
  };

  std::vector<bool> seen(n, false);
  std::vector<TypedPathComponent> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || is_hub(s)) continue;
    // Collect the component, then find an endpoint to walk from.
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : inner_neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Vertex> endpoints;
    for (Vertex v : comp) {
      if (inner_neighbors(v).size() < 2) endpoints.push_back(v);
    }
    TypedPathComponent tc;
    Vertex start;
    Vertex prev = -1;
    if (endpoints.empty()) {
      tc.kind = ComponentKind::kCycle;
      start = comp.front();
      std::vector<Vertex> nb = inner_neighbors(start);
      prev = std::max(nb[0], nb[1]);
    } else {
      start = endpoints.front();
    }
    Vertex cur = start;
    while (true) {
      tc.vertices.push_back(cur);
      Vertex next = -1;
      for (Vertex w : inner_neighbors(cur)) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      if (tc.kind == ComponentKind::kCycle && next == start) break;
      if (next == -1 || (tc.kind == ComponentKind::kPath &&
                         tc.vertices.size() == comp.size())) {
        break;
      }
      prev = cur;
      cur = next;
    }
    if (tc.kind == ComponentKind::kPath) {
      tc.attach_case = ClassifyPath(g, hubs, tc.vertices);
    }
    out.push_back(std::move(tc));
  }
  return out;
}

std::string_view ToString(AttachCase c) {
  switch (c) {
    case AttachCase::kI: return "i";
    case AttachCase::kII: return "ii";
    case AttachCase::kIII: return "iii";
    case AttachCase::kIV: return "iv";
    case AttachCase::kV: return "v";
    case AttachCase::kVI: return "vi";
    case AttachCase::kVII: return "vii";
  }
  return "?";
}

}  // namespace pdslab

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

#ifndef PDSLAB_GRAPH_H_
#define PDSLAB_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pdslab/vertex_set.h"

namespace pdslab {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws PreconditionError on self-loops, duplicate edges or bad ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  // Sorted, each edge stored once as (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
};

Graph Complement(const Graph& g);
Graph DisjointUnion(const Graph& a, const Graph& b);

struct GraphParams {
  int max_degree = 0;
  // Largest h such that at least h vertices have degree >= h.
  int h_index = 0;
  int degeneracy = 0;
  // Peeling order of the min-degree elimination, ties to the smallest index.
  std::vector<Vertex> elimination_order;
};

GraphParams ComputeParams(const Graph& g);
int HIndex(const Graph& g);

std::vector<VertexSet> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);
// False for the empty set.
bool InducesConnected(const Graph& g, const VertexSet& s);
bool IsIndependentSet(const Graph& g, const VertexSet& s);
bool HasIsolatedVertex(const Graph& g);
// Colour classes 0/1 per vertex, or nullopt when g has an odd cycle.
std::optional<std::vector<int>> TwoColoring(const Graph& g);

struct HubPair {
  Vertex u = -1;
  Vertex v = -1;
};

// Every vertex of degree >= 3 first, padded with the highest degree
// vertices; ties go to the smallest index. Requires n >= 2.
HubPair SelectHubs(const Graph& g);

enum class ComponentKind { kPath, kCycle };

// How a path of g - {u*, v*} touches the hubs; u1 is the first vertex.
//   kI: no hub edges        kII: u1-u*          kIII: u1-u*, un-u*
//   kIV: u1-v*              kV: u1-v*, un-v*    kVI: u1-u*, un-v*
//   kVII: u1-v*, un-u*
// A path with only its last vertex attached is reversed so u1 is attached.
enum class AttachCase { kI = 1, kII, kIII, kIV, kV, kVI, kVII };

struct TypedPathComponent {
  ComponentKind kind = ComponentKind::kPath;
  std::vector<Vertex> vertices;
  AttachCase attach_case = AttachCase::kI;
};

// Components of g - {u*, v*} in order of their smallest vertex. Paths run
// from the smaller-index endpoint unless that would leave u1 unattached.
// Throws PreconditionError if a non-hub vertex has degree above 2.
std::vector<TypedPathComponent> DecomposeDegree2(const Graph& g, HubPair hubs);

std::string_view ToString(AttachCase c);

}  // namespace pdslab

#endif  // PDSLAB_GRAPH_H_

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

#ifndef PDSLAB_VERTEX_SET_H_
#define PDSLAB_VERTEX_SET_H_

#include <initializer_list>
#include <span>
#include <vector>

namespace pdslab {

using Vertex = int;

// Subset of {0, ..., universe - 1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet All(int universe);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  // Sorted ascending.
  std::vector<Vertex> members() const;
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;

 private:
  void CheckRange(Vertex v) const;

  int universe_ = 0;
  int size_ = 0;
  std::vector<bool> bits_;
};

// Lexicographic order on sorted member lists.
bool LexLess(const VertexSet& a, const VertexSet& b);

}  // namespace pdslab

#endif  // PDSLAB_VERTEX_SET_H_

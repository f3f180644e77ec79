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

#include "pdslab/vertex_set.h"

#include <algorithm>
#include <string>

#include "pdslab/errors.h"

namespace pdslab {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw PreconditionError("negative universe size");
  bits_.assign(universe, false);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe,
                std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::All(int universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  s.size_ = universe;
  return s;
}

void VertexSet::CheckRange(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
}

bool VertexSet::contains(Vertex v) const {
  return v >= 0 && v < universe_ && bits_[v];
}

void VertexSet::insert(Vertex v) {
  CheckRange(v);
  if (!bits_[v]) {
    bits_[v] = true;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  CheckRange(v);
  if (bits_[v]) {
    bits_[v] = false;
    --size_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v = 0; v < universe_; ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (Vertex v = 0; v < universe_; ++v) {
    if (!bits_[v]) out.insert(v);
  }
  return out;
}

bool LexLess(const VertexSet& a, const VertexSet& b) {
  const std::vector<Vertex> x = a.members();
  const std::vector<Vertex> y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace pdslab

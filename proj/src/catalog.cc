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

#include "pdslab/catalog.h"

namespace pdslab::catalog {

Graph Empty(int n) { return Graph(n); }

Graph Complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph Path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

Graph CompleteMinusPerfectMatching(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!(u % 2 == 0 && v == u + 1)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph Petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph Cube() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return Graph(8, e);
}

Graph Prism() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                   {0, 3}, {1, 4}, {2, 5}});
}

Graph Cubic8Triangles() {
  return Graph(8, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {2, 4},
                   {2, 5}, {4, 6}, {5, 6}, {6, 7}, {3, 7}, {4, 7}});
}

std::vector<Named> SmallCubic() {
  return {{"K4", Complete(4)},
          {"K3,3", CompleteBipartite(3, 3)},
          {"prism", Prism()}};
}

}  // namespace pdslab::catalog

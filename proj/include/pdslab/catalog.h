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

#ifndef PDSLAB_CATALOG_H_
#define PDSLAB_CATALOG_H_

#include <string>
#include <vector>

#include "pdslab/graph.h"

namespace pdslab::catalog {

Graph Empty(int n);
Graph Complete(int n);
Graph Path(int n);
Graph Cycle(int n);
// Centre 0 with `leaves` leaves.
Graph Star(int leaves);
Graph CompleteBipartite(int a, int b);
// K_n minus the perfect matching {2i, 2i + 1}; n even.
Graph CompleteMinusPerfectMatching(int n);
Graph Petersen();
Graph Cube();
Graph Prism();
// Cubic graph on 8 vertices with two triangles.
Graph Cubic8Triangles();

struct Named {
  std::string name;
  Graph graph;
};

// Every cubic graph on 4 and 6 vertices.
std::vector<Named> SmallCubic();

}  // namespace pdslab::catalog

#endif  // PDSLAB_CATALOG_H_

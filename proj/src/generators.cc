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

#include "pdslab/generators.h"

#include <algorithm>
#include <numeric>
#include <vector>

namespace pdslab::gen {

namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Graph RandomGnp(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Coin(rng, p)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph RandomIsolatedFree(Rng& rng, int n, double p) {
  Graph g = RandomGnp(rng, n, p);
  std::vector<Edge> e = g.edges();
  std::vector<int> deg(n, 0);
  for (auto [u, v] : e) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 0) continue;
    int w = Uniform(rng, 0, n - 2);
    if (w >= v) ++w;
    e.emplace_back(v, w);
    ++deg[v];
    ++deg[w];
  }
  return Graph(n, e);
}

Graph Shuffle(Rng& rng, const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(n, e);
}

Graph RandomH2(Rng& rng, int n) {
  const int hub_u = 0;
  const int hub_v = 1;
  std::vector<Edge> e;
  if (Coin(rng, 0.5)) e.emplace_back(hub_u, hub_v);
  const double attach = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
  int next = 2;
  while (next < n) {
    const int len = std::min(n - next, Uniform(rng, 1, std::max(1, (n - 2) / 2)));
    const bool cycle = len >= 3 && Coin(rng, 0.2);
    for (int i = 0; i + 1 < len; ++i) e.emplace_back(next + i, next + i + 1);
    if (cycle) {
      e.emplace_back(next, next + len - 1);
    } else {
      const int first = next;
      const int last = next + len - 1;
      for (int hub : {hub_u, hub_v}) {
        if (Coin(rng, attach)) {
          e.emplace_back(hub, first);
          // A singleton may take both hubs; longer paths one hub per end.
          if (len > 1) {
            if (Coin(rng, 0.5)) {
              const int other = Coin(rng, 0.5) ? hub_u : hub_v;
              e.emplace_back(other, last);
            }
            break;
          }
        }
      }
    }
    next += len;
  }
  return Shuffle(rng, Graph(n, e));
}

Graph RandomCoH2(Rng& rng, int n) { return Complement(RandomH2(rng, n)); }

}  // namespace pdslab::gen

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

#include <bit>

#include "pdslab/detail/subset_kernel.h"
#include "pdslab/errors.h"

namespace pdslab::detail {

MaskGraph::MaskGraph(const Graph& g) : n(g.num_vertices()) {
  if (n > 64) throw PreconditionError("mask graph supports at most 64 vertices");
  adj.assign(n, 0);
  degree.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
}

bool MaskIsPds(const MaskGraph& g, std::uint64_t set, int size) {
  const std::int64_t o = g.n - size;
  const std::int64_t s1 = size - 1;
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const std::int64_t inside = std::popcount(g.adj[v] & set);
    const std::int64_t outside = g.degree[v] - inside;
    if (inside * o < outside * s1) return false;
  }
  return true;
}

bool MaskIsConnected(const MaskGraph& g, std::uint64_t set) {
  if (set == 0) return false;
  std::uint64_t reached = set & (~set + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.adj[std::countr_zero(rest)];
    }
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact: r * (n - k + i) is divisible by i at every step.
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

std::vector<int> UnrankCombination(int n, int k, std::uint64_t rank) {
  std::vector<int> c(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t count = Binomial(n - x - 1, k - i - 1);
      if (rank < count) break;
      rank -= count;
      ++x;
    }
    c[i] = x++;
  }
  return c;
}

std::optional<std::uint64_t> FirstHitInRange(const MaskGraph& g, int k,
                                             bool connected,
                                             std::uint64_t begin,
                                             std::uint64_t end) {
  const int n = g.n;
  if (k <= 0 || k > n || begin >= end) return std::nullopt;
  std::vector<int> c = UnrankCombination(n, k, begin);
  std::vector<std::uint64_t> prefix(k + 1, 0);
  for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | (1ULL << c[i]);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    const std::uint64_t set = prefix[k];
    if (MaskIsPds(g, set, k) && (!connected || MaskIsConnected(g, set))) {
      return rank;
    }
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    for (int j = i; j < k; ++j) prefix[j + 1] = prefix[j] | (1ULL << c[j]);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> FirstHitSerial(const MaskGraph& g, int k,
                                            bool connected) {
  return FirstHitInRange(g, k, connected, 0, Binomial(g.n, k));
}

}  // namespace pdslab::detail

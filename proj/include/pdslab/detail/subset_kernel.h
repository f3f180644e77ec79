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

#ifndef PDSLAB_DETAIL_SUBSET_KERNEL_H_
#define PDSLAB_DETAIL_SUBSET_KERNEL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pdslab/graph.h"

namespace pdslab::detail {

// Adjacency as one 64-bit row per vertex. Vertex i is bit i.
struct MaskGraph {
  explicit MaskGraph(const Graph& g);
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<int> degree;
};

bool MaskIsPds(const MaskGraph& g, std::uint64_t set, int size);
bool MaskIsConnected(const MaskGraph& g, std::uint64_t set);

std::uint64_t Binomial(int n, int k);
// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<int> UnrankCombination(int n, int k, std::uint64_t rank);

// Rank of the lexicographically first k-subset that is a (connected) PDS,
// scanning ranks in [begin, end).
std::optional<std::uint64_t> FirstHitInRange(const MaskGraph& g, int k,
                                             bool connected,
                                             std::uint64_t begin,
                                             std::uint64_t end);

// Serial reference: one scan over all ranks.
std::optional<std::uint64_t> FirstHitSerial(const MaskGraph& g, int k,
                                            bool connected);
// OpenMP: the rank space is split into chunks; the minimum hit wins.
std::optional<std::uint64_t> FirstHitParallel(const MaskGraph& g, int k,
                                              bool connected);

}  // namespace pdslab::detail

#endif  // PDSLAB_DETAIL_SUBSET_KERNEL_H_

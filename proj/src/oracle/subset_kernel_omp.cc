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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "pdslab/detail/subset_kernel.h"

namespace pdslab::detail {

std::optional<std::uint64_t> FirstHitParallel(const MaskGraph& g, int k,
                                              bool connected) {
  const std::uint64_t total = Binomial(g.n, k);
  if (total == 0) return std::nullopt;
  const std::uint64_t threads = std::max(1, omp_get_max_threads());
  const std::uint64_t chunks = std::min<std::uint64_t>(total, threads * 16);
  const std::uint64_t width = (total + chunks - 1) / chunks;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * width;
    if (begin >= total || begin >= best.load(std::memory_order_relaxed)) {
      continue;
    }
    const std::uint64_t end = std::min(total, begin + width);
    auto hit = FirstHitInRange(g, k, connected, begin, end);
    if (!hit) continue;
    std::uint64_t seen = best.load();
    while (*hit < seen && !best.compare_exchange_weak(seen, *hit)) {
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace pdslab::detail

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

#include "pdslab/knapsack2d.h"

#include <algorithm>

#include "pdslab/errors.h"

namespace pdslab {

namespace {

struct State {
  std::int64_t w1;
  std::int64_t w2;
  int parent;  // index into the previous layer's frontier at the source value
  bool took;
};

using Frontier = std::vector<State>;

// Keeps points not dominated in the bounded dimensions. Earlier points win
// ties, so "skip" beats "take" when weights are equal.
Frontier Prune(Frontier points, const KnapsackInstance& inst) {
  auto key1 = [&](const State& s) { return inst.cap1.bounded() ? s.w1 : 0; };
  auto key2 = [&](const State& s) { return inst.cap2.bounded() ? s.w2 : 0; };
  std::stable_sort(points.begin(), points.end(),
                   [&](const State& a, const State& b) {
                     if (key1(a) != key1(b)) return key1(a) < key1(b);
                     return key2(a) < key2(b);
                   });
  Frontier out;
  for (const State& s : points) {
    if (!out.empty() && key2(out.back()) <= key2(s)) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> SolveExact2d(const KnapsackInstance& inst) {
  if (inst.target < 0) throw PreconditionError("negative knapsack target");
  for (const KnapsackItem& item : inst.items) {
    if (item.value <= 0) throw PreconditionError("item value must be positive");
    if (item.w1 < 0 || item.w2 < 0) {
      throw PreconditionError("item weights must be non-negative");
    }
  }
  if (!inst.cap1.Admits(0) || !inst.cap2.Admits(0)) return std::nullopt;
  const int count = static_cast<int>(inst.items.size());
  const std::int64_t target = inst.target;

  // layers[i][t]: frontier after deciding items 0..i-1 with value t.
  std::vector<std::vector<Frontier>> layers(
      count + 1, std::vector<Frontier>(target + 1));
  layers[0][0].push_back({0, 0, -1, false});
  for (int i = 0; i < count; ++i) {
    const KnapsackItem& item = inst.items[i];
    for (std::int64_t t = 0; t <= target; ++t) {
      Frontier candidates;
      const Frontier& skip = layers[i][t];
      for (int p = 0; p < static_cast<int>(skip.size()); ++p) {
        candidates.push_back({skip[p].w1, skip[p].w2, p, false});
      }
      if (t - item.value >= 0) {
        const Frontier& from = layers[i][t - item.value];
        for (int p = 0; p < static_cast<int>(from.size()); ++p) {
          const std::int64_t w1 = from[p].w1 + item.w1;
          const std::int64_t w2 = from[p].w2 + item.w2;
          if (!inst.cap1.Admits(w1) || !inst.cap2.Admits(w2)) continue;
          candidates.push_back({w1, w2, p, true});
        }
      }
      layers[i + 1][t] = Prune(std::move(candidates), inst);
    }
  }
  if (layers[count][target].empty()) return std::nullopt;

  std::vector<int> chosen;
  std::int64_t t = target;
  int index = 0;
  for (int i = count; i > 0; --i) {
    const State& s = layers[i][t][index];
    if (s.took) {
      chosen.push_back(i - 1);
      t -= inst.items[i - 1].value;
    }
    index = s.parent;
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace pdslab

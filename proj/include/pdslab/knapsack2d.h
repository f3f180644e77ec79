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

#ifndef PDSLAB_KNAPSACK2D_H_
#define PDSLAB_KNAPSACK2D_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace pdslab {

struct KnapsackItem {
  std::int64_t value = 0;
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
};

// Upper bound on one weight dimension, or no bound at all.
class Cap {
 public:
  static Cap Unbounded() { return Cap(); }
  static Cap AtMost(std::int64_t limit) { return Cap(limit); }

  bool bounded() const { return bounded_; }
  std::int64_t limit() const { return limit_; }
  bool Admits(std::int64_t w) const { return !bounded_ || w <= limit_; }

  bool operator==(const Cap& other) const = default;

 private:
  Cap() = default;
  explicit Cap(std::int64_t limit) : bounded_(true), limit_(limit) {}

  bool bounded_ = false;
  std::int64_t limit_ = 0;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t target = 0;
  Cap cap1 = Cap::Unbounded();
  Cap cap2 = Cap::Unbounded();
};

// Finds item indices whose values sum to exactly the target and whose
// weights respect both caps. Dynamic programme over (prefix, value) keeping
// a Pareto frontier of weight pairs. Deterministic; target 0 yields {}.
// Throws PreconditionError on non-positive values, negative weights or a
// negative target.
std::optional<std::vector<int>> SolveExact2d(const KnapsackInstance& inst);

}  // namespace pdslab

#endif  // PDSLAB_KNAPSACK2D_H_

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

#ifndef PDSLAB_SOLVER_H2_H_
#define PDSLAB_SOLVER_H2_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdslab/graph.h"
#include "pdslab/knapsack2d.h"
#include "pdslab/result.h"

namespace pdslab {

// kLiteral reproduces the uncorrected knapsack target and caps, which omit
// the excluded hubs and the edges into forced-out paths. Kept only to
// demonstrate the discrepancy.
enum class TargetAccounting { kCorrected, kLiteral };

struct SolverOptions {
  int oracle_cap = kDefaultOracleCap;
  TargetAccounting accounting = TargetAccounting::kCorrected;
};

// Which hubs belong to S.
struct HubChoice {
  HubPair hubs;
  bool u_in = true;
  bool v_in = true;
  bool hub_edge = false;
};

HubChoice MakeHubChoice(const Graph& g, HubPair hubs, bool u_in, bool v_in);

// Knapsack for "is there a PDS of size k with S intersect hubs = S*?".
// Selected items leave S; forced paths (those touching an excluded hub)
// always leave S.
struct HubKnapsack {
  KnapsackInstance instance;
  std::vector<int> item_components;
  std::vector<int> forced_out_components;
  std::int64_t target = 0;
  // Negative target or negative cap: no PDS of this shape exists.
  bool infeasible = false;
};

HubKnapsack BuildKnapsackInstance(
    const Graph& g, std::span<const TypedPathComponent> components,
    const HubChoice& choice, int k,
    TargetAccounting accounting = TargetAccounting::kCorrected);
HubKnapsack BuildKnapsackInstance(
    const Graph& g, const HubChoice& choice, int k,
    TargetAccounting accounting = TargetAccounting::kCorrected);

// S = S* plus every component that is neither forced out nor selected.
VertexSet AssembleSet(const Graph& g,
                      std::span<const TypedPathComponent> components,
                      const HubChoice& choice, const HubKnapsack& knapsack,
                      std::span<const int> selected);

// h(g) <= 1. The connected variant returns the largest component when g
// is disconnected.
SolveResult SolveH1(const Graph& g, bool connected = false);

// h(g) <= 2. Sweeps k from n - 1 down to ceil(n/2) + 1 over the four hub
// choices; every witness is re-verified. Falls back to FallbackHalfPds.
SolveResult SolveH2(const Graph& g, bool connected = false,
                    const SolverOptions& options = {});

// Largest k the sweep declares feasible, without verifying the witness.
std::optional<int> H2SweepClaim(const Graph& g, TargetAccounting accounting);

}  // namespace pdslab

#endif  // PDSLAB_SOLVER_H2_H_

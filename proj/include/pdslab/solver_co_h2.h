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

#ifndef PDSLAB_SOLVER_CO_H2_H_
#define PDSLAB_SOLVER_CO_H2_H_

#include <optional>
#include <string>
#include <vector>

#include "pdslab/graph.h"
#include "pdslab/result.h"
#include "pdslab/solver_h2.h"

namespace pdslab {

// A path or cycle of complement(g) - {u*, v*}.
//   type 1: no hub edges      type 2: one end to u*    type 3: both ends to u*
//   type 4: one end to v*     type 5: both ends to v*  type 6: u* and v*
// Paths run from the hub-attached end; type 6 runs from the u* end.
struct CoComponent {
  int type = 1;
  // |vertices| mod 3.
  int subtype = 0;
  ComponentKind kind = ComponentKind::kPath;
  std::vector<Vertex> vertices;
  bool first_to_u = false;
  bool first_to_v = false;
  bool last_to_u = false;
  bool last_to_v = false;
};

struct CoClassification {
  Graph complement;
  HubPair hubs;
  std::vector<CoComponent> components;
};

// Hubs forced into the dominator D = V \ S.
struct HubForce {
  bool u = false;
  bool v = false;
  bool operator==(const HubForce&) const = default;
};

inline constexpr HubForce kHubLadder[4] = {
    {false, false}, {true, false}, {false, true}, {true, true}};

struct DominatorCandidate {
  VertexSet d_set;
  HubForce forced;
  std::vector<std::string> provenance;
};

// Requires h(complement(g)) <= 2 and n >= 3.
CoClassification ClassifyCoComponents(const Graph& g);

// Rule-based dominators for one rung of the ladder: a canonical pick per
// component by type and subtype, swept over the choice of side for every
// type 6 path of length 2 mod 3.
std::vector<DominatorCandidate> CandidateDominators(const CoClassification& c,
                                                    HubForce forced);

// A dominator of exactly `size` vertices that covers every non-isolated
// complement vertex outside it and gives every hub outside it enough
// complement neighbours inside it, with the fewest non-hub picks. Exact
// dynamic programme over components and hub neighbour counts.
std::optional<DominatorCandidate> MinimumDominator(const CoClassification& c,
                                                   HubForce forced, int size);

// True when every non-isolated vertex of h outside d has a neighbour in d.
bool DominatesNonIsolated(const Graph& h, const VertexSet& d);

// h(complement(g)) <= 1.
SolveResult SolveCoH1(const Graph& g, bool connected = false,
                      const SolverOptions& options = {});

// h(complement(g)) <= 2.
SolveResult SolveCoH2(const Graph& g, bool connected = false,
                      const SolverOptions& options = {});

}  // namespace pdslab

#endif  // PDSLAB_SOLVER_CO_H2_H_

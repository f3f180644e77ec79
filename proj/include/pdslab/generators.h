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

#ifndef PDSLAB_GENERATORS_H_
#define PDSLAB_GENERATORS_H_

#include <cstdint>
#include <random>

#include "pdslab/graph.h"

namespace pdslab::gen {

using Rng = std::mt19937_64;

// G(n, p).
Graph RandomGnp(Rng& rng, int n, double p);

// G(n, p) with each isolated vertex joined to a random other vertex.
Graph RandomIsolatedFree(Rng& rng, int n, double p);

// Two hubs plus random paths and cycles whose path ends may attach to
// either hub; vertices are relabelled at random. h <= 2 by construction.
Graph RandomH2(Rng& rng, int n);

// Complement of RandomH2, so the complement has h <= 2.
Graph RandomCoH2(Rng& rng, int n);

// Random relabelling of g.
Graph Shuffle(Rng& rng, const Graph& g);

}  // namespace pdslab::gen

#endif  // PDSLAB_GENERATORS_H_

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

#ifndef PDSLAB_FALLBACK_H_
#define PDSLAB_FALLBACK_H_

#include "pdslab/graph.h"
#include "pdslab/result.h"

namespace pdslab {

// A verified PDS of size ceil(n/2) or ceil(n/2) + 1 for a graph without
// isolated vertices: degree-greedy seed, swap hill climbing, then an
// exhaustive scan of both sizes when n <= cap. Throws InternalError if
// every stage stalls.
SolveResult FallbackHalfPds(const Graph& g, int cap = kDefaultOracleCap);

// Largest connected PDS of size at most max_size. Exact via the oracle when
// n <= cap, otherwise the best verified window along BFS orders.
SolveResult ConnectedFallback(const Graph& g, int max_size,
                              int cap = kDefaultOracleCap);

// For disconnected g: the largest component, which is a connected PDS
// whenever it has at least 2 vertices.
SolveResult LargestComponentPds(const Graph& g, SolveMethod method);

}  // namespace pdslab

#endif  // PDSLAB_FALLBACK_H_

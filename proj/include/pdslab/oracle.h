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

#ifndef PDSLAB_ORACLE_H_
#define PDSLAB_ORACLE_H_

#include "pdslab/graph.h"
#include "pdslab/result.h"

namespace pdslab {

enum class Execution { kSerial, kParallel };

struct OracleOptions {
  bool connected = false;
  int cap = kDefaultOracleCap;
  int min_size = 2;
  // Negative means n - 1.
  int max_size = -1;
  Execution execution = Execution::kParallel;
};

// Scans sizes from max_size down to min_size and subsets of each size in
// lexicographic order; the first hit is the witness. Serial and parallel
// execution return identical results. Throws PreconditionError when n
// exceeds the cap or n < 3.
SolveResult MaxPdsBruteforce(const Graph& g, const OracleOptions& options);
SolveResult MaxPdsBruteforce(const Graph& g, bool connected = false);

struct IndependentSetResult {
  int size = 0;
  VertexSet witness;
};

// Exact maximum independent set by branch and bound.
IndependentSetResult MaxIndependentSet(const Graph& g,
                                       int cap = kMaxOracleVertices);

}  // namespace pdslab

#endif  // PDSLAB_ORACLE_H_

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

#ifndef PDSLAB_SELFTEST_H_
#define PDSLAB_SELFTEST_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pdslab/solver_h2.h"

namespace pdslab::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Empty on success; otherwise the first failing instance in graph format.
  std::string counterexample;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026;

// Solver vs oracle on random graphs with h <= 2, n in [5, 16], both
// connectivity flags.
CheckResult H2OracleAgreement(int count, std::uint64_t seed,
                              const SolverOptions& options);
// Same for graphs whose complement has h <= 2.
CheckResult CoH2OracleAgreement(int count, std::uint64_t seed,
                                const SolverOptions& options);
// Named graphs with known optimum, through the oracle and the dispatcher.
CheckResult FixedValues(const SolverOptions& options);
// Sparse family parameters for cubic sizes n in {4, 6, 8, 10}.
CheckResult GadgetParameters();
// Structure and forward/backward maps of sparse gadgets of small cubic
// graphs.
CheckResult SparseGadgets();
// Oracle optimum of every dense-delta6 gadget of a cubic graph on 4 or 6
// vertices equals m + alpha.
CheckResult DenseDelta6Equivalence(int oracle_cap);
// Structure of dense-degen2 gadgets; with `exhaustive`, no PDS of size
// >= 22 in the 24-vertex gadget of K4.
CheckResult DenseDegen2(bool exhaustive, int oracle_cap);
// Fallback yields a verified PDS of size >= ceil(n/2).
CheckResult FallbackHalf(int count, std::uint64_t seed, int oracle_cap);
// Low-degree closure, the domination view and the three forms.
CheckResult StructuralInvariants(int graphs, int triples, std::uint64_t seed);
// The uncorrected knapsack target over-claims on P4; the corrected one agrees
// with the oracle.
CheckResult CorrectedTarget();

enum class Level { kQuick, kFull };

// Runs every check at the given level, reporting each as it finishes.
std::vector<CheckResult> Run(
    Level level, const SolverOptions& options,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace pdslab::selftest

#endif  // PDSLAB_SELFTEST_H_

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

#ifndef PDSLAB_SOLVE_H_
#define PDSLAB_SOLVE_H_

#include <optional>
#include <string_view>

#include "pdslab/graph.h"
#include "pdslab/result.h"
#include "pdslab/solver_h2.h"

namespace pdslab {

enum class Method { kAuto, kBrute, kH2, kCoH2 };

std::optional<Method> ParseMethod(std::string_view name);

// kAuto: h(g) <= 2 uses SolveH2, else h(complement) <= 2 uses SolveCoH2,
// else the oracle when n is within the cap. Throws PreconditionError with
// "no polynomial case applies" otherwise.
std::string_view ToString(Method method);
// The solver kAuto dispatches to; other methods are returned unchanged.
Method ResolveMethod(const Graph& g, Method method,
                     const SolverOptions& options = {});
SolveResult Solve(const Graph& g, Method method, bool connected,
                  const SolverOptions& options = {});

}  // namespace pdslab

#endif  // PDSLAB_SOLVE_H_

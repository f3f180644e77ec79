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

#include "pdslab/solve.h"

#include <algorithm>

#include "pdslab/errors.h"
#include "pdslab/oracle.h"
#include "pdslab/solver_co_h2.h"

namespace pdslab {

std::optional<Method> ParseMethod(std::string_view name) {
  if (name == "auto") return Method::kAuto;
  if (name == "brute") return Method::kBrute;
  if (name == "h2") return Method::kH2;
  if (name == "co-h2") return Method::kCoH2;
  return std::nullopt;
}

std::string_view ToString(Method method) {
  switch (method) {
    case Method::kAuto: return "auto";
    case Method::kBrute: return "brute";
    case Method::kH2: return "h2";
    case Method::kCoH2: return "co-h2";
  }
  return "?";
}

Method ResolveMethod(const Graph& g, Method method,
                     const SolverOptions& options) {
  if (method != Method::kAuto) return method;
  if (g.num_vertices() < 3) throw PreconditionError("need at least 3 vertices");
  if (HIndex(g) <= 2) return Method::kH2;
  if (HIndex(Complement(g)) <= 2) return Method::kCoH2;
  if (g.num_vertices() <= std::min(options.oracle_cap, kMaxOracleVertices)) {
    return Method::kBrute;
  }
  throw PreconditionError("no polynomial case applies");
}

SolveResult Solve(const Graph& g, Method method, bool connected,
                  const SolverOptions& options) {
  switch (ResolveMethod(g, method, options)) {
    case Method::kH2: return SolveH2(g, connected, options);
    case Method::kCoH2: return SolveCoH2(g, connected, options);
    default: break;
  }
  OracleOptions o;
  o.connected = connected;
  o.cap = options.oracle_cap;
  return MaxPdsBruteforce(g, o);
}

}  // namespace pdslab

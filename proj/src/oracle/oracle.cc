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

#include "pdslab/oracle.h"

#include <bit>
#include <string>

#include "pdslab/detail/subset_kernel.h"
#include "pdslab/errors.h"
#include "pdslab/pds.h"

namespace pdslab {

std::string_view ToString(SolveMethod m) {
  switch (m) {
    case SolveMethod::kBrute: return "brute";
    case SolveMethod::kH1: return "h1";
    case SolveMethod::kH2: return "h2";
    case SolveMethod::kCoH1: return "co-h1";
    case SolveMethod::kCoH2: return "co-h2";
    case SolveMethod::kFallback: return "fallback";
  }
  return "?";
}

SolveResult MaxPdsBruteforce(const Graph& g, const OracleOptions& options) {
  const int n = g.num_vertices();
  const int cap = std::min(options.cap, kMaxOracleVertices);
  if (n > cap) {
    throw PreconditionError("graph has " + std::to_string(n) +
                            " vertices, above the oracle cap of " +
                            std::to_string(cap));
  }
  if (n < 3) throw PreconditionError("need at least 3 vertices");
  const int top = options.max_size < 0 ? n - 1 : std::min(options.max_size, n - 1);
  const int bottom = std::max(options.min_size, 2);
  detail::MaskGraph mg(g);
  SolveResult result;
  result.method = SolveMethod::kBrute;
  for (int k = top; k >= bottom; --k) {
    auto hit = options.execution == Execution::kParallel
                   ? detail::FirstHitParallel(mg, k, options.connected)
                   : detail::FirstHitSerial(mg, k, options.connected);
    if (!hit) continue;
    const std::vector<int> members = detail::UnrankCombination(n, k, *hit);
    VertexSet s(n, members);
    result.size = k;
    result.verified =
        options.connected ? IsConnectedPds(g, s) : IsPds(g, s);
    result.witness = std::move(s);
    return result;
  }
  return result;
}

SolveResult MaxPdsBruteforce(const Graph& g, bool connected) {
  OracleOptions options;
  options.connected = connected;
  return MaxPdsBruteforce(g, options);
}

namespace {

struct MisSearch {
  const detail::MaskGraph& g;
  std::uint64_t best = 0;
  int best_size = -1;

  void Run(std::uint64_t chosen, int chosen_size, std::uint64_t candidates) {
    if (chosen_size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
      best = chosen;
      best_size = chosen_size;
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = 1ULL << v;
    Run(chosen | bit, chosen_size + 1, candidates & ~bit & ~g.adj[v]);
    Run(chosen, chosen_size, candidates & ~bit);
  }
};

}  // namespace

IndependentSetResult MaxIndependentSet(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > std::min(cap, kMaxOracleVertices)) {
    throw PreconditionError("graph too large for exact independent set");
  }
  detail::MaskGraph mg(g);
  MisSearch search{mg};
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  search.Run(0, 0, all);
  IndependentSetResult out;
  out.size = search.best_size;
  out.witness = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if ((search.best >> v) & 1) out.witness.insert(v);
  }
  return out;
}

}  // namespace pdslab

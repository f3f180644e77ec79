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

#include "pdslab/selftest.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <sstream>

#include "pdslab/catalog.h"
#include "pdslab/errors.h"
#include "pdslab/fallback.h"
#include "pdslab/generators.h"
#include "pdslab/graph_io.h"
#include "pdslab/oracle.h"
#include "pdslab/pds.h"
#include "pdslab/reductions.h"
#include "pdslab/solve.h"
#include "pdslab/solver_co_h2.h"

namespace pdslab::selftest {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  Timer() : start_(Clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
};

std::string Describe(const Graph& g, const std::string& note) {
  std::ostringstream out;
  out << "# " << note << '\n';
  WriteGraph(out, g);
  return out.str();
}

CheckResult Finish(std::string name, const Timer& timer, bool passed,
                   std::string detail, std::string counterexample = {}) {
  return {std::move(name), passed, std::move(detail), std::move(counterexample),
          timer.Seconds()};
}

// Evaluates `check` on each graph in parallel; returns the first failure
// by index so the outcome does not depend on the schedule.
template <typename Check>
std::optional<std::pair<int, std::string>> FirstFailure(
    const std::vector<Graph>& graphs, Check check) {
  std::vector<std::string> failures(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
    try {
      failures[i] = check(graphs[i]);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
    }
  }
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
    if (!failures[i].empty()) return std::pair{i, failures[i]};
  }
  return std::nullopt;
}

template <typename Solver>
CheckResult OracleAgreement(const char* name, int count, std::uint64_t seed,
                            const SolverOptions& options,
                            Graph (*make)(gen::Rng&, int), Solver solver) {
  Timer timer;
  gen::Rng rng(seed);
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(5, 16)(rng);
    graphs.push_back(make(rng, n));
  }
  auto failure = FirstFailure(graphs, [&](const Graph& g) -> std::string {
    for (bool connected : {false, true}) {
      OracleOptions o;
      o.connected = connected;
      o.cap = kMaxOracleVertices;
      o.execution = Execution::kSerial;
      const SolveResult expected = MaxPdsBruteforce(g, o);
      const SolveResult got = solver(g, connected, options);
      const bool witness_ok =
          got.size == 0 ? !got.witness
                        : got.witness && got.witness->size() == got.size &&
                              (connected ? IsConnectedPds(g, *got.witness)
                                         : IsPds(g, *got.witness));
      if (got.size != expected.size || !witness_ok) {
        return "connected=" + std::to_string(connected) + " solver " +
               std::to_string(got.size) + " oracle " +
               std::to_string(expected.size);
      }
    }
    return {};
  });
  if (failure) {
    return Finish(name, timer, false,
                  "instance " + std::to_string(failure->first) + ": " +
                      failure->second,
                  Describe(graphs[failure->first], failure->second));
  }
  return Finish(name, timer, true,
                std::to_string(count) + " graphs x 2 flags, 0 mismatches");
}

// All k-subsets of {0..n-1} that are independent in g.
std::vector<VertexSet> IndependentSetsOfSize(const Graph& g, int k) {
  const int n = g.num_vertices();
  std::vector<VertexSet> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  while (true) {
    VertexSet s(n, c);
    if (IsIndependentSet(g, s)) out.push_back(s);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

CheckResult H2OracleAgreement(int count, std::uint64_t seed,
                              const SolverOptions& options) {
  return OracleAgreement(
      "h2-oracle-agreement", count, seed, options, gen::RandomH2,
      [](const Graph& g, bool c, const SolverOptions& o) {
        return SolveH2(g, c, o);
      });
}

CheckResult CoH2OracleAgreement(int count, std::uint64_t seed,
                                const SolverOptions& options) {
  return OracleAgreement(
      "co-h2-oracle-agreement", count, seed, options, gen::RandomCoH2,
      [](const Graph& g, bool c, const SolverOptions& o) {
        return SolveCoH2(g, c, o);
      });
}

CheckResult FixedValues(const SolverOptions& options) {
  Timer timer;
  struct Case {
    const char* name;
    Graph g;
    int expected;
  };
  const Graph triangle = catalog::Complete(3);
  const Case cases[] = {
      {"C5", catalog::Cycle(5), 3},
      {"P4", catalog::Path(4), 2},
      {"K4", catalog::Complete(4), 3},
      {"K6 minus perfect matching", catalog::CompleteMinusPerfectMatching(6), 3},
      {"complement of two triangles", Complement(DisjointUnion(triangle, triangle)), 4},
      {"complement of P4 + K1",
       Complement(DisjointUnion(catalog::Path(4), catalog::Empty(1))), 3},
  };
  for (const Case& c : cases) {
    try {
      const int oracle = MaxPdsBruteforce(c.g).size;
      const int solved = Solve(c.g, Method::kAuto, false, options).size;
      if (oracle != c.expected || solved != c.expected) {
        const std::string why = std::string(c.name) + ": expected " +
                                std::to_string(c.expected) + ", oracle " +
                                std::to_string(oracle) + ", solver " +
                                std::to_string(solved);
        return Finish("fixed-values", timer, false, why, Describe(c.g, why));
      }
    } catch (const std::exception& e) {
      const std::string why = std::string(c.name) + ": " + e.what();
      return Finish("fixed-values", timer, false, why, Describe(c.g, why));
    }
  }
  return Finish("fixed-values", timer, true, "6 named graphs match");
}

CheckResult GadgetParameters() {
  Timer timer;
  int audited = 0;
  for (int n : {4, 6, 8, 10}) {
    const int m = 3 * n / 2;
    for (int k = 3; k < n; ++k) {
      try {
        const GadgetParams p = SparseGadgetParams(n, m, k);
        // Recompute from the definition.
        std::int64_t c = std::max<std::int64_t>(
            {4LL * (n + 3 * m), 8LL * n + 1, 2LL * n + 2 * m});
        std::int64_t big_n = c + 1;
        while ((3 * big_n + 1) % 4) ++big_n;
        const std::int64_t kp = (3 * big_n + 1) / 4;
        if (p.c != c || p.n_prime != big_n || p.k_prime != kp ||
            p.a != kp - m - (n - k) || p.b != (big_n - 1) / 4 - k ||
            !SparseParamViolations(p, n, m, k).empty()) {
          return Finish("gadget-parameters", timer, false,
                        "mismatch at n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
        }
        ++audited;
      } catch (const std::exception& e) {
        return Finish("gadget-parameters", timer, false, e.what());
      }
    }
  }
  struct Spot {
    int n, m, k;
    std::int64_t c, big_n, kp, a, b;
  };
  const Spot spots[] = {{4, 6, 3, 88, 89, 67, 60, 19},
                        {8, 12, 3, 176, 177, 133, 116, 41},
                        {6, 9, 3, 132, 133, 100, 88, 30}};
  for (const Spot& s : spots) {
    const GadgetParams p = SparseGadgetParams(s.n, s.m, s.k);
    if (p.c != s.c || p.n_prime != s.big_n || p.k_prime != s.kp || p.a != s.a ||
        p.b != s.b) {
      return Finish("gadget-parameters", timer, false,
                    "spot value mismatch at n=" + std::to_string(s.n));
    }
  }
  return Finish("gadget-parameters", timer, true,
                std::to_string(audited) + " parameter sets and 3 spot values");
}

CheckResult SparseGadgets() {
  Timer timer;
  std::vector<catalog::Named> graphs = catalog::SmallCubic();
  graphs.push_back({"Q3", catalog::Cube()});
  int mapped = 0;
  for (const auto& [name, g] : graphs) {
    for (int k = 3; k < g.num_vertices(); ++k) {
      for (bool bipartite : {false, true}) {
        const std::string where = name + " k=" + std::to_string(k) +
                                  (bipartite ? " bipartite" : "");
        try {
          const ReductionOutput r = ReduceSparse(g, k, bipartite);
          const auto audit = AuditGadget(r);
          if (!audit.empty()) {
            return Finish("sparse-gadgets", timer, false, where + ": " + audit.front());
          }
          for (const VertexSet& i : IndependentSetsOfSize(g, k)) {
            const VertexSet s = ForwardMap(r, i);
            if (s.size() != r.k_prime || !IsPds(r.gadget, s) ||
                BackwardMap(r, s) != i) {
              return Finish("sparse-gadgets", timer, false, where + ": map failed");
            }
            ++mapped;
          }
        } catch (const std::exception& e) {
          return Finish("sparse-gadgets", timer, false, where + ": " + e.what());
        }
      }
    }
  }
  return Finish("sparse-gadgets", timer, true,
                "structure audited, " + std::to_string(mapped) +
                    " independent sets mapped to PDS of size k'");
}

CheckResult DenseDelta6Equivalence(int oracle_cap) {
  Timer timer;
  int checked = 0;
  for (const auto& [name, g] : catalog::SmallCubic()) {
    const int alpha = MaxIndependentSet(g).size;
    const int m = g.num_edges();
    OracleOptions o;
    o.cap = std::max(oracle_cap, 15);
    const ReductionOutput base = ReduceDenseDelta6(g, 1);
    const SolveResult best = MaxPdsBruteforce(base.gadget, o);
    if (best.size != m + alpha) {
      return Finish("dense-delta6-equivalence", timer, false,
                    name + ": gadget optimum " + std::to_string(best.size) +
                        ", expected m + alpha = " + std::to_string(m + alpha),
                    Describe(base.gadget, name + " dense-delta6 gadget"));
    }
    for (int k = 1; k <= g.num_vertices(); ++k) {
      const ReductionOutput r = ReduceDenseDelta6(g, k);
      const auto audit = AuditGadget(r);
      if (!audit.empty()) {
        return Finish("dense-delta6-equivalence", timer, false,
                      name + ": " + audit.front());
      }
      if ((best.size >= r.k_prime) != (alpha >= k)) {
        return Finish("dense-delta6-equivalence", timer, false,
                      name + ": decision differs at k=" + std::to_string(k));
      }
      if (alpha >= k) {
        const VertexSet i = BackwardMap(r, *best.witness);
        if (i.size() < k) {
          return Finish("dense-delta6-equivalence", timer, false,
                        name + ": backward map too small");
        }
      }
      ++checked;
    }
  }
  return Finish("dense-delta6-equivalence", timer, true,
                std::to_string(checked) + " (graph, k) pairs, optimum = m + alpha");
}

CheckResult DenseDegen2(bool exhaustive, int oracle_cap) {
  Timer timer;
  const std::pair<std::string, Graph> graphs[] = {{"K4", catalog::Complete(4)},
                                                  {"Q3", catalog::Cube()}};
  for (const auto& [name, g] : graphs) {
    for (int k = 4; k <= g.num_vertices(); ++k) {
      const ReductionOutput r = ReduceDenseDegen2(g, k);
      const auto audit = AuditGadget(r);
      if (!audit.empty()) {
        return Finish("dense-degen2", timer, false,
                      name + " k=" + std::to_string(k) + ": " + audit.front());
      }
    }
  }
  const Graph q3 = catalog::Cube();
  const ReductionOutput rq = ReduceDenseDegen2(q3, 4);
  const VertexSet colour_class(8, {0, 3, 5, 6});
  try {
    const VertexSet s = ForwardMap(rq, colour_class);
    if (rq.gadget.num_vertices() != 94 || s.size() != rq.k_prime ||
        BackwardMap(rq, s) != colour_class) {
      return Finish("dense-degen2", timer, false, "Q3 k=4 forward map");
    }
  } catch (const std::exception& e) {
    return Finish("dense-degen2", timer, false, std::string("Q3 k=4: ") + e.what());
  }
  if (!Degen2MarginHolds(8, 12, 4)) {
    return Finish("dense-degen2", timer, false, "margin inequality fails at n=8 k=4");
  }
  std::string detail = "K4 and Q3 gadgets audited, Q3 k=4 maps to |V'|=94";
  if (exhaustive) {
    const ReductionOutput rk = ReduceDenseDegen2(catalog::Complete(4), 4);
    OracleOptions o;
    o.cap = std::max(oracle_cap, 24);
    o.min_size = 22;
    const SolveResult hit = MaxPdsBruteforce(rk.gadget, o);
    if (rk.gadget.num_vertices() != 24 || hit.size != 0) {
      return Finish("dense-degen2", timer, false,
                    "K4 k=4 gadget has a PDS of size " + std::to_string(hit.size),
                    Describe(rk.gadget, "K4 dense-degen2 gadget"));
    }
    o.min_size = 2;
    const int best = MaxPdsBruteforce(rk.gadget, o).size;
    detail += "; K4 k=4 gadget: no PDS >= 22 (optimum " + std::to_string(best) + ")";
  }
  return Finish("dense-degen2", timer, true, detail);
}

CheckResult FallbackHalf(int count, std::uint64_t seed, int oracle_cap) {
  Timer timer;
  gen::Rng rng(seed);
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    graphs.push_back(gen::RandomIsolatedFree(rng, n, p));
  }
  auto failure = FirstFailure(graphs, [&](const Graph& g) -> std::string {
    const SolveResult r = FallbackHalfPds(g, oracle_cap);
    if (!r.verified || !r.witness || !IsPds(g, *r.witness) ||
        r.size < HalfCeil(g.num_vertices())) {
      return "fallback returned size " + std::to_string(r.size);
    }
    return {};
  });
  if (failure) {
    return Finish("fallback-half", timer, false, failure->second,
                  Describe(graphs[failure->first], failure->second));
  }
  return Finish("fallback-half", timer, true,
                std::to_string(count) + " isolated-free graphs");
}

CheckResult StructuralInvariants(int graphs, int triples, std::uint64_t seed) {
  Timer timer;
  gen::Rng rng(seed);
  std::vector<Graph> closure_graphs;
  std::vector<Graph> co_graphs;
  for (int i = 0; i < graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    closure_graphs.push_back(gen::RandomGnp(rng, n, p));
    co_graphs.push_back(gen::RandomCoH2(rng, std::uniform_int_distribution<int>(5, 12)(rng)));
  }
  auto closure = FirstFailure(closure_graphs, [](const Graph& g) -> std::string {
    const int n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet s(n);
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1) s.insert(v);
      }
      if (IsPds(g, s) && !CheckLowDegreeClosure(g, s)) return "closure fails";
    }
    return {};
  });
  if (closure) {
    return Finish("structural-invariants", timer, false, closure->second,
                  Describe(closure_graphs[closure->first], closure->second));
  }
  auto domination = FirstFailure(co_graphs, [](const Graph& g) -> std::string {
    const int n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int size = std::popcount(mask);
      if (size < HalfCeil(n) + 1 || size >= n) continue;
      VertexSet s(n);
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1) s.insert(v);
      }
      if (CoDominationCheck(g, s) != IsPds(g, s)) return "domination view differs";
    }
    return {};
  });
  if (domination) {
    return Finish("structural-invariants", timer, false, domination->second,
                  Describe(co_graphs[domination->first], domination->second));
  }
  for (int i = 0; i < triples; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 400)(rng);
    const int s = std::uniform_int_distribution<int>(2, n - 1)(rng);
    const int inside = std::uniform_int_distribution<int>(0, s - 1)(rng);
    const int outside = std::uniform_int_distribution<int>(0, n - s)(rng);
    try {
      EvaluateCounts(0, n, s, inside, outside);
    } catch (const InternalError& e) {
      return Finish("structural-invariants", timer, false, e.what());
    }
  }
  return Finish("structural-invariants", timer, true,
                std::to_string(graphs) + " closure graphs, " +
                    std::to_string(graphs) + " domination-view graphs, " +
                    std::to_string(triples) + " form triples");
}

CheckResult CorrectedTarget() {
  Timer timer;
  const Graph p4 = catalog::Path(4);
  const int oracle = MaxPdsBruteforce(p4).size;
  const auto literal = H2SweepClaim(p4, TargetAccounting::kLiteral);
  const auto corrected = H2SweepClaim(p4, TargetAccounting::kCorrected);
  const int solved = SolveH2(p4).size;
  const bool literal_disagrees = literal && *literal != oracle;
  const bool corrected_agrees = !corrected && solved == oracle;
  std::string detail = "P4 oracle " + std::to_string(oracle) + ", literal target claims " +
                       (literal ? std::to_string(*literal) : std::string("none")) +
                       ", corrected solver " + std::to_string(solved);
  return Finish("corrected-target", timer, literal_disagrees && corrected_agrees,
                detail);
}

std::vector<CheckResult> Run(Level level, const SolverOptions& options,
                             const std::function<void(const CheckResult&)>& on_result) {
  const bool full = level == Level::kFull;
  const std::uint64_t seed = kDefaultSeed;
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return FixedValues(options); },
      [&] { return CorrectedTarget(); },
      [&] { return GadgetParameters(); },
      [&] { return H2OracleAgreement(full ? 500 : 40, seed, options); },
      [&] { return CoH2OracleAgreement(full ? 500 : 40, seed + 1, options); },
      [&] { return SparseGadgets(); },
      [&] { return FallbackHalf(full ? 1000 : 100, seed + 2, options.oracle_cap); },
      [&] { return StructuralInvariants(full ? 200 : 20, full ? 100000 : 10000, seed + 3); },
      [&] { return DenseDegen2(full, options.oracle_cap); },
  };
  if (full) checks.push_back([&] { return DenseDelta6Equivalence(options.oracle_cap); });
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    out.push_back(check());
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace pdslab::selftest

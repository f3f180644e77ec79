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

#include "pdslab/solver_h2.h"

#include <string>

#include "pdslab/errors.h"
#include "pdslab/fallback.h"
#include "pdslab/pds.h"

namespace pdslab {

namespace {

int EdgesInto(const Graph& g, Vertex hub, const TypedPathComponent& c) {
  int count = 0;
  for (Vertex x : c.vertices) count += g.adjacent(hub, x);
  return count;
}

bool Touches(const Graph& g, Vertex hub, const TypedPathComponent& c) {
  return EdgesInto(g, hub, c) > 0;
}

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

SolveResult Verified(const Graph& g, VertexSet s, SolveMethod method,
                     bool connected) {
  SolveResult r;
  r.size = s.size();
  r.method = method;
  r.verified = connected ? IsConnectedPds(g, s) : IsPds(g, s);
  r.witness = std::move(s);
  if (!r.verified) {
    throw InternalError(std::string("constructed set failed verification in ") +
                        std::string(ToString(method)));
  }
  return r;
}

std::optional<Vertex> FirstIsolated(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

void CheckSolverInput(const Graph& g, int max_h) {
  if (g.num_vertices() < 3) throw PreconditionError("need at least 3 vertices");
  const int h = HIndex(g);
  if (h > max_h) {
    throw PreconditionError("h-index " + std::to_string(h) +
                            " exceeds " + std::to_string(max_h));
  }
}

const HubChoice kChoices[] = {{{}, true, true, false},
                              {{}, true, false, false},
                              {{}, false, true, false},
                              {{}, false, false, false}};

// Selected items drawn from a reduced copy of the knapsack.
struct Attempt {
  HubKnapsack knapsack;
  std::vector<int> selected;
};

std::optional<Attempt> TrySolve(HubKnapsack knapsack) {
  if (knapsack.infeasible) return std::nullopt;
  auto selected = SolveExact2d(knapsack.instance);
  if (!selected) return std::nullopt;
  return Attempt{std::move(knapsack), std::move(*selected)};
}

}  // namespace

HubChoice MakeHubChoice(const Graph& g, HubPair hubs, bool u_in, bool v_in) {
  return {hubs, u_in, v_in, g.adjacent(hubs.u, hubs.v)};
}

HubKnapsack BuildKnapsackInstance(
    const Graph& g, std::span<const TypedPathComponent> components,
    const HubChoice& choice, int k, TargetAccounting accounting) {
  const std::int64_t n = g.num_vertices();
  if (k < 2 || k >= n) throw PreconditionError("k must satisfy 2 <= k < n");
  const Vertex u = choice.hubs.u;
  const Vertex v = choice.hubs.v;
  HubKnapsack out;
  std::int64_t forced_size = 0;
  std::int64_t forced_u = 0;
  std::int64_t forced_v = 0;
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    const TypedPathComponent& c = components[i];
    const bool forced = (!choice.u_in && Touches(g, u, c)) ||
                        (!choice.v_in && Touches(g, v, c));
    if (forced) {
      out.forced_out_components.push_back(i);
      forced_size += static_cast<std::int64_t>(c.vertices.size());
      forced_u += EdgesInto(g, u, c);
      forced_v += EdgesInto(g, v, c);
      continue;
    }
    out.item_components.push_back(i);
    out.instance.items.push_back({static_cast<std::int64_t>(c.vertices.size()),
                                  EdgesInto(g, u, c), EdgesInto(g, v, c)});
  }
  const std::int64_t excluded_hubs = !choice.u_in + !choice.v_in;
  out.target = n - k - forced_size;
  if (accounting == TargetAccounting::kCorrected) out.target -= excluded_hubs;

  auto cap_for = [&](Vertex hub, bool other_out, std::int64_t forced_edges) {
    const std::int64_t lost = other_out && choice.hub_edge;
    if (accounting == TargetAccounting::kLiteral) {
      return FloorDiv((g.degree(hub) - lost) * (n - k), n - 1);
    }
    return FloorDiv(g.degree(hub) * (n - k), n - 1) - lost - forced_edges;
  };
  if (choice.u_in) {
    const std::int64_t cap = cap_for(u, !choice.v_in, forced_u);
    out.instance.cap1 = Cap::AtMost(cap);
    if (cap < 0) out.infeasible = true;
  }
  if (choice.v_in) {
    const std::int64_t cap = cap_for(v, !choice.u_in, forced_v);
    out.instance.cap2 = Cap::AtMost(cap);
    if (cap < 0) out.infeasible = true;
  }
  if (out.target < 0) out.infeasible = true;
  out.instance.target = std::max<std::int64_t>(out.target, 0);
  return out;
}

HubKnapsack BuildKnapsackInstance(const Graph& g, const HubChoice& choice,
                                  int k, TargetAccounting accounting) {
  const auto components = DecomposeDegree2(g, choice.hubs);
  return BuildKnapsackInstance(g, components, choice, k, accounting);
}

VertexSet AssembleSet(const Graph& g,
                      std::span<const TypedPathComponent> components,
                      const HubChoice& choice, const HubKnapsack& knapsack,
                      std::span<const int> selected) {
  const int n = g.num_vertices();
  VertexSet s(n);
  if (choice.u_in) s.insert(choice.hubs.u);
  if (choice.v_in) s.insert(choice.hubs.v);
  std::vector<bool> out(components.size(), false);
  for (int c : knapsack.forced_out_components) out[c] = true;
  for (int i : selected) out[knapsack.item_components[i]] = true;
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    if (out[c]) continue;
    for (Vertex x : components[c].vertices) s.insert(x);
  }
  return s;
}

SolveResult SolveH1(const Graph& g, bool connected) {
  CheckSolverInput(g, 1);
  const int n = g.num_vertices();
  if (connected) {
    if (!IsConnected(g)) return LargestComponentPds(g, SolveMethod::kH1);
    // A connected graph with h <= 1 is a star; drop one leaf.
    VertexSet s = VertexSet::All(n);
    for (Vertex x = 0; x < n; ++x) {
      if (g.degree(x) == 1) {
        s.erase(x);
        break;
      }
    }
    return Verified(g, std::move(s), SolveMethod::kH1, true);
  }
  VertexSet s = VertexSet::All(n);
  if (auto iso = FirstIsolated(g)) {
    s.erase(*iso);
    return Verified(g, std::move(s), SolveMethod::kH1, false);
  }
  Vertex center = -1;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) >= 2) center = x;
  }
  if (center >= 0 && g.degree(center) == n - 1) {
    s.erase(g.neighbors(center).front());
    return Verified(g, std::move(s), SolveMethod::kH1, false);
  }
  for (auto [a, b] : g.edges()) {
    if (g.degree(a) == 1 && g.degree(b) == 1) {
      s.erase(a);
      s.erase(b);
      return Verified(g, std::move(s), SolveMethod::kH1, false);
    }
  }
  throw InternalError("h <= 1 graph without a matching edge or spanning star");
}

std::optional<int> H2SweepClaim(const Graph& g, TargetAccounting accounting) {
  CheckSolverInput(g, 2);
  const int n = g.num_vertices();
  const HubPair hubs = SelectHubs(g);
  const auto components = DecomposeDegree2(g, hubs);
  for (int k = n - 1; k >= HalfCeil(n) + 1; --k) {
    for (const HubChoice& shape : kChoices) {
      const HubChoice choice = MakeHubChoice(g, hubs, shape.u_in, shape.v_in);
      if (TrySolve(BuildKnapsackInstance(g, components, choice, k,
                                         accounting))) {
        return k;
      }
    }
  }
  return std::nullopt;
}

SolveResult SolveH2(const Graph& g, bool connected,
                    const SolverOptions& options) {
  CheckSolverInput(g, 2);
  const int n = g.num_vertices();
  if (connected && !IsConnected(g)) {
    return LargestComponentPds(g, SolveMethod::kH2);
  }
  if (HIndex(g) <= 1) return SolveH1(g, connected);
  if (!connected) {
    if (auto iso = FirstIsolated(g)) {
      VertexSet s = VertexSet::All(n);
      s.erase(*iso);
      return Verified(g, std::move(s), SolveMethod::kH2, false);
    }
  }

  const HubPair hubs = SelectHubs(g);
  const auto components = DecomposeDegree2(g, hubs);
  for (int k = n - 1; k >= HalfCeil(n) + 1; --k) {
    for (const HubChoice& shape : kChoices) {
      const HubChoice choice = MakeHubChoice(g, hubs, shape.u_in, shape.v_in);
      if (connected && !choice.u_in && !choice.v_in) continue;
      HubKnapsack base = BuildKnapsackInstance(g, components, choice, k,
                                               options.accounting);
      std::vector<HubKnapsack> variants;
      if (connected && choice.u_in && choice.v_in && !choice.hub_edge) {
        // The hubs must be joined through a path kept in S.
        for (int i = 0; i < static_cast<int>(base.item_components.size());
             ++i) {
          const auto& c = components[base.item_components[i]];
          if (!Touches(g, hubs.u, c) || !Touches(g, hubs.v, c)) continue;
          HubKnapsack kept = base;
          kept.item_components.erase(kept.item_components.begin() + i);
          kept.instance.items.erase(kept.instance.items.begin() + i);
          variants.push_back(std::move(kept));
        }
      } else {
        variants.push_back(std::move(base));
      }
      for (HubKnapsack& variant : variants) {
        auto attempt = TrySolve(std::move(variant));
        if (!attempt) continue;
        VertexSet s = AssembleSet(g, components, choice, attempt->knapsack,
                                  attempt->selected);
        if (s.size() != k) {
          throw InternalError("knapsack witness has size " +
                              std::to_string(s.size()) + ", expected " +
                              std::to_string(k));
        }
        return Verified(g, std::move(s), SolveMethod::kH2, connected);
      }
    }
  }
  if (connected) {
    return ConnectedFallback(g, HalfCeil(n), options.oracle_cap);
  }
  return FallbackHalfPds(g, options.oracle_cap);
}

}  // namespace pdslab

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

#include "pdslab/solver_co_h2.h"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "pdslab/errors.h"
#include "pdslab/fallback.h"
#include "pdslab/pds.h"

namespace pdslab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void CheckCoInput(const Graph& g, const Graph& h, int max_h) {
  if (g.num_vertices() < 3) throw PreconditionError("need at least 3 vertices");
  const int hh = HIndex(h);
  if (hh > max_h) {
    throw PreconditionError("complement h-index " + std::to_string(hh) +
                            " exceeds " + std::to_string(max_h));
  }
}

SolveResult Verified(const Graph& g, VertexSet s, SolveMethod method,
                     bool connected) {
  SolveResult r;
  r.size = s.size();
  r.method = method;
  r.verified = connected ? IsConnectedPds(g, s) : IsPds(g, s);
  if (!r.verified) {
    throw InternalError(std::string("constructed set failed verification in ") +
                        std::string(ToString(method)));
  }
  r.witness = std::move(s);
  return r;
}

std::optional<Vertex> FirstIsolated(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

// Minimum dominating picks (0-based positions) of a path of length l where
// every vertex needs cover: 1, 4, 7, ... plus the last vertex if l = 1 mod 3.
std::vector<int> PathPattern(int l) {
  std::vector<int> out;
  for (int i = 1; i < l; i += 3) out.push_back(i);
  if (l % 3 == 1) out.push_back(l - 1);
  return out;
}

// Picks the first vertex, then covers the rest from position 2 on.
std::vector<int> HubEndPattern(int l) {
  std::vector<int> out{0};
  for (int i : PathPattern(std::max(0, l - 2))) out.push_back(i + 2);
  return out;
}

bool FirstDominated(const CoComponent& c, HubForce f) {
  return (c.first_to_u && f.u) || (c.first_to_v && f.v);
}
bool LastDominated(const CoComponent& c, HubForce f) {
  return (c.last_to_u && f.u) || (c.last_to_v && f.v);
}

struct Option {
  int cost = kInf;
  int cu = 0;
  int cv = 0;
  std::vector<Vertex> picks;
};

// Exact minimum cover of a path with endpoint membership fixed.
// State: (current in D, current covered).
std::optional<std::vector<int>> MinPathCover(const std::vector<bool>& needs,
                                             int first_in, int last_in) {
  const int l = static_cast<int>(needs.size());
  // dp[i][a][b], choice back-pointers.
  std::vector<std::array<std::array<int, 2>, 2>> dp(l);
  std::vector<std::array<std::array<std::pair<int, int>, 2>, 2>> from(l);
  for (auto& row : dp) row = {{{kInf, kInf}, {kInf, kInf}}};
  auto allowed = [&](int i, int a) {
    if (i == 0 && a != first_in) return false;
    if (i == l - 1 && a != last_in) return false;
    return true;
  };
  for (int a = 0; a < 2; ++a) {
    if (!allowed(0, a)) continue;
    const int b = a || !needs[0];
    dp[0][a][b] = a;
    from[0][a][b] = {-1, -1};
  }
  for (int i = 0; i + 1 < l; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        if (dp[i][a][b] >= kInf) continue;
        for (int c = 0; c < 2; ++c) {
          if (!allowed(i + 1, c)) continue;
          if (!(b || c)) continue;
          const int nb = c || a || !needs[i + 1];
          const int cost = dp[i][a][b] + c;
          if (cost < dp[i + 1][c][nb]) {
            dp[i + 1][c][nb] = cost;
            from[i + 1][c][nb] = {a, b};
          }
        }
      }
    }
  }
  int best = kInf;
  int ba = -1;
  for (int a = 0; a < 2; ++a) {
    if (dp[l - 1][a][1] < best) {
      best = dp[l - 1][a][1];
      ba = a;
    }
  }
  if (best >= kInf) return std::nullopt;
  std::vector<int> picks;
  int a = ba;
  int b = 1;
  for (int i = l - 1; i >= 0; --i) {
    if (a) picks.push_back(i);
    auto [pa, pb] = from[i][a][b];
    a = pa;
    b = pb;
  }
  std::reverse(picks.begin(), picks.end());
  return picks;
}

std::vector<Option> ComponentOptions(const CoComponent& c, HubForce f) {
  const int l = static_cast<int>(c.vertices.size());
  std::vector<Option> out;
  if (c.kind == ComponentKind::kCycle) {
    Option o;
    o.cost = 0;
    for (int i = 0; i < l; i += 3) {
      o.picks.push_back(c.vertices[i]);
      ++o.cost;
    }
    out.push_back(std::move(o));
    return out;
  }
  const bool isolated = l == 1 && !c.first_to_u && !c.first_to_v;
  std::vector<bool> needs(l, true);
  if (isolated) needs[0] = false;
  if (FirstDominated(c, f)) needs[0] = false;
  if (LastDominated(c, f)) needs[l - 1] = false;
  for (int first_in = 0; first_in < 2; ++first_in) {
    for (int last_in = 0; last_in < 2; ++last_in) {
      if (l == 1 && first_in != last_in) continue;
      auto picks = MinPathCover(needs, first_in, last_in);
      if (!picks) continue;
      Option o;
      o.cost = static_cast<int>(picks->size());
      o.cu = (first_in && c.first_to_u) + (l > 1 && last_in && c.last_to_u);
      o.cv = (first_in && c.first_to_v) + (l > 1 && last_in && c.last_to_v);
      for (int i : *picks) o.picks.push_back(c.vertices[i]);
      out.push_back(std::move(o));
    }
  }
  return out;
}

void AddHubCover(const CoClassification& c, HubForce f, VertexSet& d,
                 std::vector<std::string>& provenance) {
  const Graph& h = c.complement;
  for (auto [hub, forced] : {std::pair{c.hubs.u, f.u}, {c.hubs.v, f.v}}) {
    if (forced || h.degree(hub) == 0 || d.contains(hub)) continue;
    bool covered = false;
    for (Vertex w : h.neighbors(hub)) covered = covered || d.contains(w);
    if (!covered) {
      d.insert(h.neighbors(hub).front());
      provenance.push_back("hub-cover:" + std::to_string(hub));
    }
  }
}

std::string Tag(const CoComponent& c, const std::string& rule) {
  return "type" + std::to_string(c.type) + "." + std::to_string(c.subtype) +
         ":" + rule;
}

// Rule pick for one component. six_two_u_side selects the side for type 6
// paths of length 2 mod 3 whose both ends see hubs outside D.
std::vector<Vertex> RulePicks(const CoComponent& c, HubForce f,
                              bool six_two_u_side, std::string& tag) {
  const int l = static_cast<int>(c.vertices.size());
  std::vector<Vertex> out;
  if (c.kind == ComponentKind::kCycle) {
    for (int i = 0; i < l; i += 3) out.push_back(c.vertices[i]);
    tag = Tag(c, "cycle");
    return out;
  }
  if (c.type == 1) {
    if (l == 1) {
      tag = Tag(c, "isolated");
      return out;
    }
    for (int i : PathPattern(l)) out.push_back(c.vertices[i]);
    tag = Tag(c, "pattern");
    return out;
  }
  const bool pre_first = FirstDominated(c, f);
  const bool pre_last = l > 1 && LastDominated(c, f);
  if (l == 1 && pre_first) {
    tag = Tag(c, "covered");
    return out;
  }
  const int begin = pre_first ? 1 : 0;
  const int end = pre_last ? l - 1 : l;
  const int len = end - begin;
  if (len <= 0) {
    tag = Tag(c, "covered");
    return out;
  }
  const bool front_hub =
      begin == 0 && ((c.first_to_u && !f.u) || (c.first_to_v && !f.v));
  const bool back_hub =
      end == l && l > 1 && ((c.last_to_u && !f.u) || (c.last_to_v && !f.v));
  const int r = len % 3;
  std::vector<int> local;
  bool reversed = false;
  std::string rule;
  if (!front_hub && !back_hub) {
    local = PathPattern(len);
    rule = "pattern";
  } else if (r == 0) {
    local = PathPattern(len);
    rule = "inner";
  } else if (front_hub && back_hub && r == 2 && c.type == 6) {
    local = HubEndPattern(len);
    reversed = !six_two_u_side;
    rule = six_two_u_side ? "u-side" : "v-side";
  } else {
    local = HubEndPattern(len);
    reversed = !front_hub;
    rule = "hub-end";
  }
  for (int i : local) {
    out.push_back(c.vertices[reversed ? end - 1 - i : begin + i]);
  }
  tag = Tag(c, rule);
  return out;
}

}  // namespace

CoClassification ClassifyCoComponents(const Graph& g) {
  CoClassification out;
  out.complement = Complement(g);
  CheckCoInput(g, out.complement, 2);
  const Graph& h = out.complement;
  out.hubs = SelectHubs(h);
  for (TypedPathComponent& tc : DecomposeDegree2(h, out.hubs)) {
    CoComponent c;
    c.kind = tc.kind;
    c.vertices = std::move(tc.vertices);
    c.subtype = static_cast<int>(c.vertices.size()) % 3;
    switch (tc.attach_case) {
      case AttachCase::kI: c.type = 1; break;
      case AttachCase::kII: c.type = 2; break;
      case AttachCase::kIII: c.type = 3; break;
      case AttachCase::kIV: c.type = 4; break;
      case AttachCase::kV: c.type = 5; break;
      case AttachCase::kVI: c.type = 6; break;
      case AttachCase::kVII:
        c.type = 6;
        std::reverse(c.vertices.begin(), c.vertices.end());
        break;
    }
    c.first_to_u = h.adjacent(c.vertices.front(), out.hubs.u);
    c.first_to_v = h.adjacent(c.vertices.front(), out.hubs.v);
    c.last_to_u = h.adjacent(c.vertices.back(), out.hubs.u);
    c.last_to_v = h.adjacent(c.vertices.back(), out.hubs.v);
    out.components.push_back(std::move(c));
  }
  return out;
}

bool DominatesNonIsolated(const Graph& h, const VertexSet& d) {
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (d.contains(v) || h.degree(v) == 0) continue;
    bool covered = false;
    for (Vertex w : h.neighbors(v)) covered = covered || d.contains(w);
    if (!covered) return false;
  }
  return true;
}

std::vector<DominatorCandidate> CandidateDominators(const CoClassification& c,
                                                    HubForce forced) {
  const int n = c.complement.num_vertices();
  std::vector<int> swept;
  for (int i = 0; i < static_cast<int>(c.components.size()); ++i) {
    const CoComponent& comp = c.components[i];
    if (comp.kind == ComponentKind::kPath && comp.type == 6 &&
        comp.vertices.size() > 1 && comp.subtype == 2 && !forced.u &&
        !forced.v) {
      swept.push_back(i);
    }
  }
  std::vector<DominatorCandidate> out;
  for (int take_u = 0; take_u <= static_cast<int>(swept.size()); ++take_u) {
    DominatorCandidate cand{VertexSet(n), forced, {}};
    if (forced.u) cand.d_set.insert(c.hubs.u);
    if (forced.v) cand.d_set.insert(c.hubs.v);
    int seen = 0;
    for (int i = 0; i < static_cast<int>(c.components.size()); ++i) {
      bool u_side = true;
      if (seen < static_cast<int>(swept.size()) && swept[seen] == i) {
        u_side = seen < take_u;
        ++seen;
      }
      std::string tag;
      for (Vertex x : RulePicks(c.components[i], forced, u_side, tag)) {
        cand.d_set.insert(x);
      }
      cand.provenance.push_back(std::move(tag));
    }
    AddHubCover(c, forced, cand.d_set, cand.provenance);
    out.push_back(std::move(cand));
  }
  return out;
}

std::optional<DominatorCandidate> MinimumDominator(const CoClassification& c,
                                                   HubForce forced,
                                                   int size) {
  const Graph& h = c.complement;
  const int n = h.num_vertices();
  const int hub_count = forced.u + forced.v;
  if (size < hub_count || size >= n - 1) return std::nullopt;
  const bool hub_edge = h.adjacent(c.hubs.u, c.hubs.v);
  auto need = [&](Vertex hub, bool other_forced) {
    // b * (n - 1) >= d_h(hub) * size for b neighbours inside D.
    const std::int64_t d = h.degree(hub);
    std::int64_t b = (d * size + n - 2) / (n - 1);
    b -= other_forced && hub_edge;
    return static_cast<int>(std::max<std::int64_t>(b, 0));
  };
  const int need_u = forced.u ? 0 : need(c.hubs.u, forced.v);
  const int need_v = forced.v ? 0 : need(c.hubs.v, forced.u);
  const int wu = need_u + 1;
  const int wv = need_v + 1;

  const int count = static_cast<int>(c.components.size());
  std::vector<std::vector<Option>> options(count);
  for (int i = 0; i < count; ++i) options[i] = ComponentOptions(c.components[i], forced);

  // cost[i][bu][bv] after the first i components.
  std::vector<std::vector<int>> cost(count + 1, std::vector<int>(wu * wv, kInf));
  std::vector<std::vector<std::pair<int, int>>> back(
      count + 1, std::vector<std::pair<int, int>>(wu * wv, {-1, -1}));
  cost[0][0] = 0;
  for (int i = 0; i < count; ++i) {
    for (int state = 0; state < wu * wv; ++state) {
      if (cost[i][state] >= kInf) continue;
      const int bu = state / wv;
      const int bv = state % wv;
      for (int o = 0; o < static_cast<int>(options[i].size()); ++o) {
        const Option& opt = options[i][o];
        const int nu = std::min(need_u, bu + opt.cu);
        const int nv = std::min(need_v, bv + opt.cv);
        const int next = nu * wv + nv;
        const int total = cost[i][state] + opt.cost;
        if (total < cost[i + 1][next]) {
          cost[i + 1][next] = total;
          back[i + 1][next] = {state, o};
        }
      }
    }
  }
  const int final_state = need_u * wv + need_v;
  const int best = cost[count][final_state];
  if (best >= kInf || best + hub_count > size) return std::nullopt;

  DominatorCandidate cand{VertexSet(n), forced, {"exact"}};
  if (forced.u) cand.d_set.insert(c.hubs.u);
  if (forced.v) cand.d_set.insert(c.hubs.v);
  int state = final_state;
  for (int i = count; i > 0; --i) {
    auto [prev, o] = back[i][state];
    for (Vertex x : options[i - 1][o].picks) cand.d_set.insert(x);
    state = prev;
  }
  for (Vertex x = 0; x < n && cand.d_set.size() < size; ++x) {
    if (x == c.hubs.u || x == c.hubs.v || cand.d_set.contains(x)) continue;
    cand.d_set.insert(x);
  }
  if (cand.d_set.size() != size) return std::nullopt;
  return cand;
}

SolveResult SolveCoH1(const Graph& g, bool connected,
                      const SolverOptions& options) {
  const Graph h = Complement(g);
  CheckCoInput(g, h, 1);
  const int n = g.num_vertices();
  if (connected && !IsConnected(g)) {
    return LargestComponentPds(g, SolveMethod::kCoH1);
  }
  if (!connected) {
    if (auto iso = FirstIsolated(g)) {
      VertexSet s = VertexSet::All(n);
      s.erase(*iso);
      return Verified(g, std::move(s), SolveMethod::kCoH1, false);
    }
  }
  VertexSet s = VertexSet::All(n);
  if (h.num_edges() == 0) {
    s.erase(n - 1);
  } else {
    for (Vertex x = 0; x < n; ++x) {
      if (h.degree(x) >= 2) s.erase(x);
    }
    for (auto [a, b] : h.edges()) {
      if (h.degree(a) == 1 && h.degree(b) == 1) s.erase(b);
    }
  }
  const bool ok = s.size() >= HalfCeil(n) && s.size() < n &&
                  (connected ? IsConnectedPds(g, s) : IsPds(g, s));
  if (ok) return Verified(g, std::move(s), SolveMethod::kCoH1, connected);
  if (connected) {
    const int upper = s.size() >= HalfCeil(n) + 1 ? n - 1 : HalfCeil(n);
    return ConnectedFallback(g, upper, options.oracle_cap);
  }
  return FallbackHalfPds(g, options.oracle_cap);
}

SolveResult SolveCoH2(const Graph& g, bool connected,
                      const SolverOptions& options) {
  const Graph h = Complement(g);
  CheckCoInput(g, h, 2);
  const int n = g.num_vertices();
  if (connected && !IsConnected(g)) {
    return LargestComponentPds(g, SolveMethod::kCoH2);
  }
  if (!connected) {
    if (auto iso = FirstIsolated(g)) {
      VertexSet s = VertexSet::All(n);
      s.erase(*iso);
      return Verified(g, std::move(s), SolveMethod::kCoH2, false);
    }
  }
  if (HIndex(h) <= 1) return SolveCoH1(g, connected, options);

  const CoClassification cls = ClassifyCoComponents(g);
  struct Entry {
    DominatorCandidate cand;
    int rung;
  };
  std::vector<Entry> pool;
  const int threshold = HalfCeil(n) + 1;
  for (int rung = 0; rung < 4; ++rung) {
    const HubForce f = kHubLadder[rung];
    for (DominatorCandidate& cand : CandidateDominators(cls, f)) {
      pool.push_back({std::move(cand), rung});
    }
    for (int t = std::max(1, f.u + f.v); n - t >= threshold; ++t) {
      if (auto cand = MinimumDominator(cls, f, t)) {
        pool.push_back({std::move(*cand), rung});
        break;
      }
    }
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.cand.d_set.size() != b.cand.d_set.size()) {
                       return a.cand.d_set.size() < b.cand.d_set.size();
                     }
                     if (a.rung != b.rung) return a.rung < b.rung;
                     return LexLess(a.cand.d_set, b.cand.d_set);
                   });
  for (const Entry& e : pool) {
    const VertexSet s = e.cand.d_set.complement();
    if (s.size() < std::max(2, HalfCeil(n)) || s.size() >= n) continue;
    const bool pds = IsPds(g, s);
    if (s.size() >= threshold && CoDominationCheck(g, s) != pds) {
      throw InternalError("domination view disagrees with the PDS test");
    }
    if (!pds) continue;
    if (connected && !InducesConnected(g, s)) {
      if (n <= std::min(options.oracle_cap, kMaxOracleVertices)) {
        return ConnectedFallback(g, n - 1, options.oracle_cap);
      }
      continue;
    }
    return Verified(g, s, SolveMethod::kCoH2, connected);
  }
  if (connected) return ConnectedFallback(g, HalfCeil(n), options.oracle_cap);
  return FallbackHalfPds(g, options.oracle_cap);
}

}  // namespace pdslab

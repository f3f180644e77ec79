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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "pdslab/catalog.h"
#include "pdslab/errors.h"
#include "pdslab/generators.h"
#include "pdslab/pds.h"
#include "pdslab/solver_co_h2.h"
#include "test_support.h"

namespace pdslab {
namespace {

// complement(P4 + K1) with P4 = 0-1-2-3 and K1 = 4.
Graph CoP4K1() { return Complement(Graph(5, {{0, 1}, {1, 2}, {2, 3}})); }

Graph CoTwoTriangles() {
  return Complement(DisjointUnion(catalog::Complete(3), catalog::Complete(3)));
}

const CoComponent* Find(const CoClassification& c, Vertex v) {
  for (const CoComponent& comp : c.components) {
    if (std::find(comp.vertices.begin(), comp.vertices.end(), v) != comp.vertices.end()) {
      return &comp;
    }
  }
  return nullptr;
}

TEST(CoClassifyTest, P4PlusIsolated) {
  const CoClassification c = ClassifyCoComponents(CoP4K1());
  EXPECT_EQ(c.hubs.u, 1);
  EXPECT_EQ(c.hubs.v, 2);
  ASSERT_EQ(c.components.size(), 3u);
  const CoComponent* a = Find(c, 0);
  const CoComponent* d = Find(c, 3);
  const CoComponent* e = Find(c, 4);
  ASSERT_TRUE(a && d && e);
  EXPECT_EQ(a->type, 2);
  EXPECT_EQ(a->subtype, 1);
  EXPECT_EQ(d->type, 4);
  EXPECT_EQ(d->subtype, 1);
  EXPECT_EQ(e->type, 1);
  EXPECT_EQ(e->subtype, 1);
}

TEST(CoClassifyTest, TwoTriangles) {
  const CoClassification c = ClassifyCoComponents(CoTwoTriangles());
  ASSERT_EQ(c.components.size(), 2u);
  int cycles = 0;
  int singles = 0;
  for (const CoComponent& comp : c.components) {
    if (comp.kind == ComponentKind::kCycle) {
      ++cycles;
      EXPECT_EQ(comp.type, 1);
      EXPECT_EQ(comp.subtype, 0);
    } else {
      ++singles;
      EXPECT_EQ(comp.type, 6);
      EXPECT_EQ(comp.subtype, 1);
    }
  }
  EXPECT_EQ(cycles, 1);
  EXPECT_EQ(singles, 1);
}

TEST(CoClassifyTest, CycleAndBridgingPath) {
  // Complement: C7 on 0..6, hubs 7 and 8 (adjacent), path 9-10 from 7 to 8,
  // pendants 11 and 12 on the hubs.
  std::vector<Edge> h;
  for (int i = 0; i < 7; ++i) h.emplace_back(i, (i + 1) % 7);
  for (Edge e : {Edge{7, 8}, Edge{7, 9}, Edge{9, 10}, Edge{10, 8}, Edge{7, 11},
                 Edge{8, 12}}) {
    h.push_back(e);
  }
  const CoClassification c = ClassifyCoComponents(Complement(Graph(13, h)));
  EXPECT_EQ(c.hubs.u, 7);
  EXPECT_EQ(c.hubs.v, 8);
  bool cycle = false;
  bool bridge = false;
  for (const CoComponent& comp : c.components) {
    if (comp.kind == ComponentKind::kCycle && comp.type == 1 && comp.subtype == 1) cycle = true;
    if (comp.kind == ComponentKind::kPath && comp.type == 6) bridge = true;
  }
  EXPECT_TRUE(cycle);
  EXPECT_TRUE(bridge);
}

TEST(CoClassifyTest, RejectsLargeComplementH) {
  EXPECT_THROW(ClassifyCoComponents(Complement(catalog::Petersen())), PreconditionError);
}

TEST(CoDominatorTest, P4PlusIsolatedNeedsTwo) {
  const CoClassification c = ClassifyCoComponents(CoP4K1());
  for (const DominatorCandidate& d : CandidateDominators(c, kHubLadder[0])) {
    EXPECT_GE(d.d_set.size(), 2);
  }
  EXPECT_FALSE(MinimumDominator(c, kHubLadder[0], 1));
}

TEST(CoDominatorTest, TwoTrianglesWithOneHub) {
  const CoClassification c = ClassifyCoComponents(CoTwoTriangles());
  const auto candidates = CandidateDominators(c, HubForce{true, false});
  ASSERT_FALSE(candidates.empty());
  const auto best = std::min_element(
      candidates.begin(), candidates.end(),
      [](const auto& a, const auto& b) { return a.d_set.size() < b.d_set.size(); });
  EXPECT_EQ(best->d_set.size(), 2);
  EXPECT_TRUE(best->d_set.contains(c.hubs.u));
  EXPECT_TRUE(CoDominationCheck(CoTwoTriangles(), best->d_set.complement()));
}

TEST(CoDominatorTest, TriangleNeedsOneVertex) {
  // Complement is a triangle plus two isolated hubs of h <= 2.
  const Graph g = Complement(DisjointUnion(catalog::Complete(3), catalog::Empty(2)));
  const CoClassification c = ClassifyCoComponents(g);
  bool found = false;
  for (const DominatorCandidate& d : CandidateDominators(c, kHubLadder[0])) {
    if (d.d_set.size() == 1) found = true;
  }
  EXPECT_TRUE(found);
}

// Every candidate dominates the non-isolated complement vertices and
// contains its forced hubs.
TEST(CoDominatorTest, CandidatesAreSound) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 14)(rng);
    const Graph g = gen::RandomCoH2(rng, n);
    const CoClassification c = ClassifyCoComponents(g);
    for (HubForce forced : kHubLadder) {
      for (const DominatorCandidate& d : CandidateDominators(c, forced)) {
        EXPECT_TRUE(DominatesNonIsolated(c.complement, d.d_set));
        if (forced.u) {
          EXPECT_TRUE(d.d_set.contains(c.hubs.u));
        }
        if (forced.v) {
          EXPECT_TRUE(d.d_set.contains(c.hubs.v));
        }
      }
      for (int size = 1; size < n - 1; ++size) {
        const auto d = MinimumDominator(c, forced, size);
        if (!d) continue;
        EXPECT_EQ(d->d_set.size(), size);
        EXPECT_TRUE(DominatesNonIsolated(c.complement, d->d_set));
      }
    }
  }
}

TEST(SolverCoH1Test, Examples) {
  const Graph k6pm = catalog::CompleteMinusPerfectMatching(6);
  EXPECT_EQ(SolveCoH1(k6pm).size, 3);
  EXPECT_EQ(SolveCoH1(Complement(catalog::Star(3))).size, 3);
  EXPECT_EQ(SolveCoH1(catalog::Complete(5)).size, 4);
}

TEST(SolverCoH2Test, Examples) {
  EXPECT_EQ(SolveCoH2(CoP4K1()).size, 3);
  EXPECT_EQ(SolveCoH2(Complement(catalog::Path(5))).size, 3);
  const SolveResult r = SolveCoH2(CoTwoTriangles());
  EXPECT_EQ(r.size, 4);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(IsPds(CoTwoTriangles(), *r.witness));
}

TEST(SolverCoH2Test, MatchesOracle) {
  gen::Rng rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    const Graph g = gen::RandomCoH2(rng, n);
    for (bool connected : {false, true}) {
      const SolveResult r = SolveCoH2(g, connected);
      EXPECT_EQ(r.size, testing::NaiveMaxPds(g, connected));
      if (r.size > 0) {
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(r.verified);
        EXPECT_TRUE(testing::NaiveIsPds(g, r.witness->members()));
      }
    }
  }
}

// The domination view: for a large set S, S is a PDS exactly when the
// co-domination conditions hold.
TEST(SolverCoH2Test, DominationViewMatchesDefinition) {
  gen::Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 10)(rng);
    const Graph g = gen::RandomCoH2(rng, n);
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const auto s = testing::MaskMembers(mask, n);
      const int size = static_cast<int>(s.size());
      if (size < HalfCeil(n) + 1 || size >= n) continue;
      EXPECT_EQ(CoDominationCheck(g, VertexSet(n, s)), testing::NaiveIsPds(g, s));
    }
  }
}

}  // namespace
}  // namespace pdslab

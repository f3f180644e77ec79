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

#include <random>

#include <gtest/gtest.h>

#include "pdslab/catalog.h"
#include "pdslab/errors.h"
#include "pdslab/fallback.h"
#include "pdslab/generators.h"
#include "pdslab/pds.h"
#include "pdslab/solve.h"
#include "pdslab/solver_h2.h"
#include "test_support.h"

namespace pdslab {
namespace {

Graph TwoTriangles() { return DisjointUnion(catalog::Complete(3), catalog::Complete(3)); }

void ExpectVerified(const Graph& g, const SolveResult& r, bool connected) {
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.witness->size(), r.size);
  EXPECT_TRUE(testing::NaiveIsPds(g, r.witness->members()));
  if (connected) {
    EXPECT_TRUE(testing::NaiveInducesConnected(g, r.witness->members()));
  }
}

TEST(SolverH1Test, Examples) {
  const Graph star = catalog::Star(4);
  SolveResult r = SolveH1(star);
  EXPECT_EQ(r.size, 4);
  EXPECT_TRUE(r.witness->contains(0));
  ExpectVerified(star, r, false);

  const Graph edges(4, {{0, 1}, {2, 3}});
  r = SolveH1(edges);
  EXPECT_EQ(r.size, 2);
  ExpectVerified(edges, r, false);

  const Graph pendant(3, {{0, 1}});
  r = SolveH1(pendant);
  EXPECT_EQ(r.size, 2);
  EXPECT_FALSE(r.witness->contains(2));
}

TEST(SolverH1Test, RejectsLargerH) {
  EXPECT_THROW(SolveH1(catalog::Cycle(5)), PreconditionError);
}

TEST(SolverH1Test, MatchesOracleOnStarForests) {
  gen::Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 11)(rng);
    // Random star forest: every vertex joins an earlier centre or stays alone.
    std::vector<Edge> edges;
    std::vector<bool> leaf(n, false);
    std::vector<int> centre_of(n, -1);
    for (int v = 1; v < n; ++v) {
      const int c = std::uniform_int_distribution<int>(-1, v - 1)(rng);
      if (c < 0 || leaf[c] || centre_of[c] >= 0) continue;
      edges.emplace_back(c, v);
      leaf[v] = true;
      centre_of[v] = c;
    }
    Graph g(n, edges);
    if (HIndex(g) > 1) continue;
    for (bool connected : {false, true}) {
      const SolveResult r = SolveH1(g, connected);
      EXPECT_EQ(r.size, testing::NaiveMaxPds(g, connected));
      if (r.size > 0) ExpectVerified(g, r, connected);
    }
  }
}

TEST(KnapsackBuildTest, P4BothHubsIn) {
  const Graph p4 = catalog::Path(4);
  const HubChoice choice = MakeHubChoice(p4, SelectHubs(p4), true, true);
  const HubKnapsack k = BuildKnapsackInstance(p4, choice, 3);
  ASSERT_EQ(k.instance.items.size(), 2u);
  EXPECT_EQ(k.instance.items[0].value, 1);
  EXPECT_EQ(k.instance.items[0].w1, 1);
  EXPECT_EQ(k.instance.items[0].w2, 0);
  EXPECT_EQ(k.instance.items[1].w1, 0);
  EXPECT_EQ(k.instance.items[1].w2, 1);
  EXPECT_EQ(k.target, 1);
  EXPECT_EQ(k.instance.cap1, Cap::AtMost(0));
  EXPECT_EQ(k.instance.cap2, Cap::AtMost(0));
  EXPECT_FALSE(SolveExact2d(k.instance));
}

TEST(KnapsackBuildTest, C5AdjacentHubs) {
  const Graph c5 = catalog::Cycle(5);
  const HubChoice choice = MakeHubChoice(c5, {0, 1}, true, true);
  EXPECT_TRUE(choice.hub_edge);
  const HubKnapsack k = BuildKnapsackInstance(c5, choice, 4);
  ASSERT_EQ(k.instance.items.size(), 1u);
  EXPECT_EQ(k.instance.items[0].value, 3);
  EXPECT_EQ(k.instance.items[0].w1, 1);
  EXPECT_EQ(k.instance.items[0].w2, 1);
  EXPECT_EQ(k.target, 1);
  EXPECT_EQ(k.instance.cap1, Cap::AtMost(0));
  EXPECT_FALSE(SolveExact2d(k.instance));
}

TEST(KnapsackBuildTest, ExcludedHubForcesPathsOut) {
  const Graph p4 = catalog::Path(4);
  const HubChoice choice = MakeHubChoice(p4, {1, 2}, true, false);
  const HubKnapsack corrected = BuildKnapsackInstance(p4, choice, 3);
  const HubKnapsack literal =
      BuildKnapsackInstance(p4, choice, 3, TargetAccounting::kLiteral);
  EXPECT_EQ(corrected.forced_out_components.size(), 1u);
  EXPECT_EQ(corrected.target, literal.target - 1);
  EXPECT_FALSE(corrected.instance.cap2.bounded());
}

// For every hub choice and k, the knapsack is feasible exactly when some
// PDS of size k has that hub intersection.
TEST(KnapsackBuildTest, EquivalentToShapeEnumeration) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 11)(rng);
    const Graph g = gen::RandomH2(rng, n);
    const HubPair hubs = SelectHubs(g);
    for (int k = HalfCeil(n) + 1; k < n; ++k) {
      for (int shape = 0; shape < 4; ++shape) {
        const bool u_in = shape & 1;
        const bool v_in = shape & 2;
        bool exists = false;
        for (std::uint64_t mask = 0; mask < (1u << n) && !exists; ++mask) {
          const auto s = testing::MaskMembers(mask, n);
          if (static_cast<int>(s.size()) != k) continue;
          if (static_cast<bool>(mask >> hubs.u & 1) != u_in) continue;
          if (static_cast<bool>(mask >> hubs.v & 1) != v_in) continue;
          exists = testing::NaiveIsPds(g, s);
        }
        const HubKnapsack kn =
            BuildKnapsackInstance(g, MakeHubChoice(g, hubs, u_in, v_in), k);
        const bool claimed = !kn.infeasible && SolveExact2d(kn.instance).has_value();
        EXPECT_EQ(claimed, exists) << "n=" << n << " k=" << k << " shape=" << shape;
      }
    }
  }
}

TEST(SolverH2Test, Examples) {
  EXPECT_EQ(SolveH2(catalog::Path(4)).size, 2);
  EXPECT_EQ(SolveH2(catalog::Cycle(5)).size, 3);
  const SolveResult c6 = SolveH2(catalog::Cycle(6));
  EXPECT_EQ(c6.size, 3);
  ExpectVerified(catalog::Cycle(6), c6, false);
  const SolveResult tri = SolveH2(TwoTriangles(), true);
  EXPECT_EQ(tri.size, 3);
  ExpectVerified(TwoTriangles(), tri, true);
}

TEST(SolverH2Test, MatchesOracle) {
  gen::Rng rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    const Graph g = gen::RandomH2(rng, n);
    for (bool connected : {false, true}) {
      const SolveResult r = SolveH2(g, connected);
      EXPECT_EQ(r.size, testing::NaiveMaxPds(g, connected));
      if (r.size > 0) ExpectVerified(g, r, connected);
    }
  }
}

TEST(SolverH2Test, LiteralTargetOverClaimsOnP4) {
  EXPECT_EQ(H2SweepClaim(catalog::Path(4), TargetAccounting::kLiteral), 3);
  EXPECT_EQ(H2SweepClaim(catalog::Path(4), TargetAccounting::kCorrected), std::nullopt);
}

// A component of a graph with at least two components is a PDS: all of
// its neighbourhoods stay inside.
TEST(SolverH2Test, WholeComponentIsPds) {
  gen::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = DisjointUnion(gen::RandomH2(rng, 6), gen::RandomH2(rng, 5));
    for (const VertexSet& c : ConnectedComponents(g)) {
      if (c.size() >= 2) {
        EXPECT_TRUE(IsConnectedPds(g, c));
      }
    }
  }
}

TEST(FallbackTest, Examples) {
  const SolveResult c6 = FallbackHalfPds(catalog::Cycle(6));
  EXPECT_EQ(c6.size, 3);
  ExpectVerified(catalog::Cycle(6), c6, false);
  EXPECT_EQ(FallbackHalfPds(catalog::Cycle(5)).size, 3);
  EXPECT_GE(FallbackHalfPds(catalog::Complete(4)).size, 2);
  EXPECT_THROW(FallbackHalfPds(Graph(4, {{0, 1}})), PreconditionError);
}

TEST(FallbackTest, HalfSizeOnRandomGraphs) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const Graph g = gen::RandomIsolatedFree(rng, n, 0.3);
    const SolveResult r = FallbackHalfPds(g);
    EXPECT_GE(r.size, HalfCeil(n));
    ExpectVerified(g, r, false);
  }
}

TEST(SolveTest, AutoDispatch) {
  EXPECT_EQ(ResolveMethod(catalog::Cycle(7), Method::kAuto), Method::kH2);
  EXPECT_EQ(ResolveMethod(catalog::Complete(7), Method::kAuto), Method::kCoH2);
  EXPECT_EQ(ResolveMethod(catalog::Petersen(), Method::kAuto), Method::kBrute);
  SolverOptions tight;
  tight.oracle_cap = 9;
  EXPECT_THROW(Solve(catalog::Petersen(), Method::kAuto, false, tight), PreconditionError);
  EXPECT_EQ(Solve(catalog::Petersen(), Method::kAuto, false).size,
            testing::NaiveMaxPds(catalog::Petersen(), false));
}

}  // namespace
}  // namespace pdslab

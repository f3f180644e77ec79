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
#include "pdslab/generators.h"
#include "pdslab/graph.h"
#include "pdslab/pds.h"
#include "test_support.h"

namespace pdslab {
namespace {

Graph DisjointTriangles(int count) {
  Graph g = catalog::Complete(3);
  for (int i = 1; i < count; ++i) g = DisjointUnion(g, catalog::Complete(3));
  return g;
}

TEST(PdsTest, IsSatisfiedExamples) {
  EXPECT_TRUE(IsSatisfied(catalog::Cycle(4), VertexSet(4, {0, 1}), 0));
  EXPECT_FALSE(IsSatisfied(catalog::Path(3), VertexSet(3, {0, 2}), 0));
  const Graph k4 = catalog::Complete(4);
  for (Vertex v : {0, 1, 3}) EXPECT_TRUE(IsSatisfied(k4, VertexSet(4, {0, 1, 3}), v));
}

TEST(PdsTest, IsSatisfiedPreconditions) {
  const Graph c4 = catalog::Cycle(4);
  EXPECT_THROW(IsSatisfied(c4, VertexSet(4, {0, 1}), 2), PreconditionError);
  EXPECT_THROW(IsSatisfied(c4, VertexSet(4, {0}), 0), PreconditionError);
  EXPECT_THROW(IsSatisfied(c4, VertexSet::All(4), 0), PreconditionError);
}

TEST(PdsTest, IsPdsExamples) {
  const Graph c5 = catalog::Cycle(5);
  EXPECT_TRUE(IsPds(c5, VertexSet(5, {0, 1, 2})));
  EXPECT_FALSE(IsPds(c5, VertexSet(5, {0, 1, 2, 3})));
  EXPECT_TRUE(IsPds(DisjointTriangles(2), VertexSet(6, {0, 1, 2})));
  EXPECT_FALSE(IsPds(c5, VertexSet(5, {0})));
  EXPECT_FALSE(IsPds(c5, VertexSet::All(5)));
}

TEST(PdsTest, IsConnectedPdsExamples) {
  EXPECT_TRUE(IsConnectedPds(catalog::Cycle(5), VertexSet(5, {0, 1, 2})));
  const Graph t3 = DisjointTriangles(3);
  const VertexSet two(9, {0, 1, 2, 3, 4, 5});
  EXPECT_TRUE(IsPds(t3, two));
  EXPECT_FALSE(IsConnectedPds(t3, two));
  EXPECT_FALSE(IsConnectedPds(catalog::Path(3), VertexSet(3, {0, 2})));
}

TEST(PdsTest, LowDegreeClosureExamples) {
  EXPECT_TRUE(CheckLowDegreeClosure(catalog::Cycle(5), VertexSet(5, {0, 1, 2})));
  EXPECT_TRUE(CheckLowDegreeClosure(DisjointTriangles(3),
                                    VertexSet(9, {0, 1, 2, 3, 4, 5})));
  EXPECT_FALSE(CheckLowDegreeClosure(catalog::Path(4), VertexSet(4, {0, 1, 2})));
}

TEST(PdsTest, CoDominationExamples) {
  // complement(P4 + K1): no 4-set passes.
  const Graph g = Complement(Graph(5, {{0, 1}, {1, 2}, {2, 3}}));
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto members = testing::MaskMembers(mask, 5);
    if (members.size() != 4) continue;
    EXPECT_FALSE(CoDominationCheck(g, VertexSet(5, members)));
    EXPECT_FALSE(IsPds(g, VertexSet(5, members)));
  }
  const Graph k7 = catalog::Complete(7);
  EXPECT_TRUE(CoDominationCheck(k7, VertexSet(7, {0, 1, 2, 3, 4})));
  EXPECT_THROW(CoDominationCheck(k7, VertexSet(7, {0, 1, 2})), PreconditionError);
}

TEST(PdsTest, EvaluateCountsFormsAgree) {
  const VertexVerdict v = EvaluateCounts(0, 5, 3, 2, 0);
  EXPECT_TRUE(v.satisfied);
  EXPECT_TRUE(v.form_a.holds() && v.form_b.holds() && v.form_c.holds());
  const VertexVerdict w = EvaluateCounts(0, 5, 4, 1, 1);
  EXPECT_FALSE(w.satisfied);
  EXPECT_EQ(w.form_a.lhs, 1);
  EXPECT_EQ(w.form_a.rhs, 3);
}

// Property: the library verdict matches the naive definition on random
// graphs and sets.
TEST(PdsTest, MatchesNaiveDefinition) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 11)(rng);
    const Graph g = gen::RandomGnp(rng, n, 0.5);
    const std::uint64_t mask =
        std::uniform_int_distribution<std::uint64_t>(0, (1u << n) - 1)(rng);
    const auto members = testing::MaskMembers(mask, n);
    const VertexSet s(n, members);
    EXPECT_EQ(IsPds(g, s), testing::NaiveIsPds(g, members));
    EXPECT_EQ(IsConnectedPds(g, s),
              testing::NaiveIsPds(g, members) && testing::NaiveInducesConnected(g, members));
  }
}

TEST(PdsTest, SatisfactionReportsFirstViolation) {
  const SatisfactionReport r = Satisfaction(catalog::Cycle(5), VertexSet(5, {0, 1, 2, 3}));
  ASSERT_FALSE(r.all_satisfied());
  EXPECT_EQ(*r.first_violation, 0);
  EXPECT_EQ(r.verdicts.size(), 4u);
}

}  // namespace
}  // namespace pdslab

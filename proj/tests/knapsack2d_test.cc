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

#include "pdslab/errors.h"
#include "pdslab/knapsack2d.h"
#include "test_support.h"

namespace pdslab {
namespace {

bool Valid(const KnapsackInstance& inst, const std::vector<int>& picked) {
  std::int64_t value = 0, w1 = 0, w2 = 0;
  for (int i : picked) {
    value += inst.items[i].value;
    w1 += inst.items[i].w1;
    w2 += inst.items[i].w2;
  }
  return value == inst.target && inst.cap1.Admits(w1) && inst.cap2.Admits(w2);
}

TEST(KnapsackTest, BothItems) {
  KnapsackInstance inst{{{2, 1, 0}, {3, 0, 1}}, 5, Cap::AtMost(1), Cap::AtMost(1)};
  const auto r = SolveExact2d(inst);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (std::vector<int>{0, 1}));
}

TEST(KnapsackTest, CapBlocks) {
  KnapsackInstance inst{{{2, 1, 0}, {3, 0, 1}}, 5, Cap::AtMost(0), Cap::AtMost(1)};
  EXPECT_FALSE(SolveExact2d(inst));
}

TEST(KnapsackTest, EitherOptimalPick) {
  KnapsackInstance inst{{{1, 1, 0}, {1, 0, 1}, {2, 1, 1}}, 2, Cap::AtMost(1),
                        Cap::AtMost(1)};
  const auto r = SolveExact2d(inst);
  ASSERT_TRUE(r);
  EXPECT_TRUE(*r == std::vector<int>{2} || *r == (std::vector<int>{0, 1}));
}

TEST(KnapsackTest, ZeroTargetIsEmpty) {
  KnapsackInstance inst{{{4, 9, 9}}, 0, Cap::AtMost(0), Cap::AtMost(0)};
  EXPECT_EQ(SolveExact2d(inst), std::vector<int>{});
}

TEST(KnapsackTest, Preconditions) {
  EXPECT_THROW(SolveExact2d({{{0, 0, 0}}, 1}), PreconditionError);
  EXPECT_THROW(SolveExact2d({{{1, -1, 0}}, 1}), PreconditionError);
  EXPECT_THROW(SolveExact2d({{{1, 0, 0}}, -1}), PreconditionError);
}

TEST(KnapsackTest, UnboundedCaps) {
  KnapsackInstance inst{{{3, 100, 100}, {1, 0, 0}}, 3};
  const auto r = SolveExact2d(inst);
  ASSERT_TRUE(r);
  EXPECT_TRUE(Valid(inst, *r));
}

// Property: feasibility matches subset enumeration and any returned pick
// is valid.
TEST(KnapsackTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(31);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 2000; ++trial) {
    KnapsackInstance inst;
    const int count = uni(0, 10);
    std::int64_t total = 0;
    for (int i = 0; i < count; ++i) {
      inst.items.push_back({uni(1, 6), uni(0, 3), uni(0, 3)});
      total += inst.items.back().value;
    }
    inst.target = uni(0, static_cast<int>(total) + 2);
    if (uni(0, 3) > 0) inst.cap1 = Cap::AtMost(uni(0, 8));
    if (uni(0, 3) > 0) inst.cap2 = Cap::AtMost(uni(0, 8));
    const auto r = SolveExact2d(inst);
    EXPECT_EQ(r.has_value(), testing::NaiveKnapsackFeasible(inst));
    if (r) {
      EXPECT_TRUE(Valid(inst, *r));
    }
    EXPECT_EQ(r, SolveExact2d(inst));
  }
}

}  // namespace
}  // namespace pdslab

// Copyright 2026 The Marshal Authors
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

#include "marshal/placement.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "marshal/generator.h"
#include "test_util.h"

namespace marshal {
namespace {

using ::marshal::testing::BlockWithLabel;
using ::marshal::testing::NineCarInstance;
using ::marshal::testing::SeventeenCarInstance;
using ::marshal::testing::WalkPlacement;

TEST(ModAddTest, WrapsZeroToN) {
  EXPECT_EQ(ModAdd(16, 1, 17), 17);
  EXPECT_EQ(ModAdd(17, 1, 17), 1);
  EXPECT_EQ(ModAdd(5, 0, 9), 5);
}

TEST(ModAddTest, StaysInRangeAndFullTurnIsIdentity) {
  for (int n = 1; n <= 12; ++n) {
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(ModAdd(i, n, n), i);
      for (int k = 0; k <= 3 * n; ++k) {
        const Position p = ModAdd(i, k, n);
        ASSERT_GE(p, 1);
        ASSERT_LE(p, n);
        ASSERT_EQ(p, ((i + k - 1) % n) + 1);
      }
    }
  }
}

TEST(PlaceBlockTest, WholeBlockFitsInCurrentSegment) {
  const std::vector<int> block = {2, 3, 8, 9};
  EXPECT_EQ(PlaceBlock(1, block, 17), (PlacementStep{2, 9, 0}));
}

TEST(PlaceBlockTest, BlockWrapsIntoNextSegment) {
  const std::vector<int> block = {5, 12, 14};
  EXPECT_EQ(PlaceBlock(11, block, 17), (PlacementStep{12, 5, 1}));
}

TEST(PlaceBlockTest, EndingAtLastPositionExhaustsSegment) {
  const std::vector<int> block = {11, 13, 17};
  EXPECT_EQ(PlaceBlock(10, block, 17), (PlacementStep{11, 17, 1}));
}

TEST(PlaceBlockTest, BlockEntirelyBeforeCursorMovesToNextSegment) {
  const std::vector<int> block = {1, 4, 10};
  EXPECT_EQ(PlaceBlock(12, block, 17), (PlacementStep{1, 10, 1}));
}

TEST(PlaceBlockTest, RejectsMalformedArguments) {
  const std::vector<int> decreasing = {3, 2};
  const std::vector<int> repeated = {2, 2};
  const std::vector<int> out_of_range = {2, 18};
  const std::vector<int> good = {2};
  EXPECT_THROW(PlaceBlock(1, decreasing, 17), std::invalid_argument);
  EXPECT_THROW(PlaceBlock(1, repeated, 17), std::invalid_argument);
  EXPECT_THROW(PlaceBlock(1, out_of_range, 17), std::invalid_argument);
  EXPECT_THROW(PlaceBlock(1, std::vector<int>{}, 17), std::invalid_argument);
  EXPECT_THROW(PlaceBlock(0, good, 17), std::invalid_argument);
  EXPECT_THROW(PlaceBlock(18, good, 17), std::invalid_argument);
}

// Places one block by walking positions from i and compares with the closed
// form, including the delta pairing and element coverage.
TEST(PlaceBlockTest, MatchesPositionWalkOnRandomBlocks) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    std::vector<int> block;
    for (int r = 1; r <= n; ++r) {
      if (rng() % 3 == 0) block.push_back(r);
    }
    if (block.empty()) block.push_back(n);
    const Position i = std::uniform_int_distribution<int>(1, n)(rng);

    std::vector<int> visited;
    long long g = i - 1, first = -1, last = -1;
    while (visited.size() < block.size()) {
      const int value = static_cast<int>(g % n) + 1;
      if (std::binary_search(block.begin(), block.end(), value)) {
        if (first < 0) first = g;
        last = g;
        visited.push_back(value);
      }
      ++g;
    }
    const PlacementStep step = PlaceBlock(i, block, n);
    ASSERT_EQ(step.alpha, first % n + 1);
    ASSERT_EQ(step.omega, last % n + 1);
    ASSERT_EQ(step.delta, last >= n - 1 ? 1 : 0);
    if (step.delta == 0) {
      ASSERT_EQ(step.omega, block.back());
      ASSERT_LE(i, block.front());
      ASSERT_LT(block.back(), n);
    }
    std::sort(visited.begin(), visited.end());
    ASSERT_EQ(visited, block);
  }
}

TEST(SimulateOrderTest, SeventeenCarWitnessUsesThreeSegments) {
  const Instance instance = SeventeenCarInstance();
  std::vector<int> order;
  for (int label : {4, 3, 1, 2, 5}) order.push_back(BlockWithLabel(instance, label));
  const Simulation sim = SimulateOrder(instance, order);
  EXPECT_EQ(sim.segments, 3);
  // B4 fits, B3 ends at 17, B1 fits, B2 wraps, B5 fits.
  EXPECT_EQ(sim.steps[1], (PlacementStep{11, 17, 1}));
  EXPECT_EQ(sim.steps[3], (PlacementStep{12, 5, 1}));
}

TEST(SimulateOrderTest, NineCarTrackAssignment) {
  const Instance instance = NineCarInstance();
  const std::vector<int> order = {0, 1, 2};
  const Simulation sim = SimulateOrder(instance, order);
  EXPECT_EQ(sim.segments, 2);
  EXPECT_EQ(sim.track_of, (std::vector<int>{1, 2, 1, 2, 1, 1, 2, 1, 2}));
}

TEST(SimulateOrderTest, SingleBlockUsesOneSegment) {
  for (int n = 1; n <= 6; ++n) {
    const Instance instance = Instance::FromDestinations(std::vector<int>(n, 1), 1);
    const std::vector<int> order = {0};
    EXPECT_EQ(SimulateOrder(instance, order).segments, 1);
  }
}

TEST(SimulateOrderTest, RejectsNonPermutations) {
  const Instance instance = NineCarInstance();
  EXPECT_THROW(SimulateOrder(instance, std::vector<int>{0, 1}),
               std::invalid_argument);
  EXPECT_THROW(SimulateOrder(instance, std::vector<int>{0, 1, 1}),
               std::invalid_argument);
  EXPECT_THROW(SimulateOrder(instance, std::vector<int>{0, 1, 3}),
               std::invalid_argument);
}

TEST(SimulateOrderTest, AgreesWithPositionWalk) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 1500; ++trial) {
    const int t = std::uniform_int_distribution<int>(1, 7)(rng);
    const int n = std::uniform_int_distribution<int>(t, 30)(rng);
    const Instance instance = GenerateOne(n, t, rng());
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const Simulation sim = SimulateOrder(instance, order);
    const auto walk = WalkPlacement(instance, order);
    ASSERT_EQ(sim.segments, walk.segments);
    ASSERT_EQ(sim.track_of, walk.track_of);
    ASSERT_EQ(OrderCost(instance, order), sim.segments);
    ASSERT_GE(sim.segments, 1);

    int delta_sum = 0;
    for (const auto& step : sim.steps) delta_sum += step.delta;
    const Position final_cursor = ModAdd(sim.steps.back().omega, 1, n);
    ASSERT_EQ(sim.segments, delta_sum + (final_cursor != 1 ? 1 : 0));
    const bool one_segment = (delta_sum == 0 && final_cursor != 1) ||
                             (delta_sum == 1 && final_cursor == 1);
    ASSERT_EQ(sim.segments == 1, one_segment);
  }
}

}  // namespace
}  // namespace marshal

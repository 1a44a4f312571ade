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

#include <stdexcept>
#include <string>
#include <vector>

namespace marshal {

namespace {

void CheckPermutation(std::span<const int> order, int t) {
  if (static_cast<int>(order.size()) != t) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(t));
  }
  std::vector<bool> seen(t, false);
  for (int b : order) {
    if (b < 0 || b >= t || seen[b]) {
      throw std::invalid_argument("order is not a permutation of block ids");
    }
    seen[b] = true;
  }
}

}  // namespace

PlacementStep PlaceBlock(Position i, std::span<const int> block, int n) {
  if (n < 1 || i < 1 || i > n) {
    throw std::invalid_argument("position out of [1, n]");
  }
  if (block.empty()) throw std::invalid_argument("empty block");
  for (size_t k = 0; k < block.size(); ++k) {
    if (block[k] < 1 || block[k] > n || (k > 0 && block[k - 1] >= block[k])) {
      throw std::invalid_argument("block must be strictly increasing in [1, n]");
    }
  }
  return PlaceBlockUnchecked(i, block, n);
}

Simulation SimulateOrder(const Instance& instance, std::span<const int> order) {
  CheckPermutation(order, instance.t());
  const int n = instance.n();
  Simulation sim;
  sim.track_of.assign(n, 0);
  sim.steps.reserve(order.size());
  Position cursor = 1;
  int completed = 0;  // segments closed so far; the cursor sits in the next
  for (int b : order) {
    const auto& block = instance.block(b);
    const PlacementStep step = PlaceBlockUnchecked(cursor, block, n);
    // Elements at or after the cursor fit in the current segment; the rest
    // wrap into the following one.
    for (int r : block) {
      sim.track_of[r - 1] = completed + (r >= cursor ? 1 : 2);
    }
    completed += step.delta;
    cursor = ModAdd(step.omega, 1, n);
    sim.steps.push_back(step);
  }
  sim.segments = completed + (cursor != 1 ? 1 : 0);
  return sim;
}

int OrderCost(const Instance& instance, std::span<const int> order) {
  const int n = instance.n();
  Position cursor = 1;
  int completed = 0;
  for (int b : order) {
    const PlacementStep step = PlaceBlockUnchecked(cursor, instance.block(b), n);
    completed += step.delta;
    cursor = ModAdd(step.omega, 1, n);
  }
  return completed + (cursor != 1 ? 1 : 0);
}

}  // namespace marshal

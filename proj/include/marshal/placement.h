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

#ifndef MARSHAL_PLACEMENT_H_
#define MARSHAL_PLACEMENT_H_

#include <span>
#include <vector>

#include "marshal/instance.h"

namespace marshal {

// The infinite sequence of segments <1..n><1..n>... is never materialized.
// Positions live in [1, n] and segment changes are tracked by `delta`.

// Modulo-n addition on {1, ..., n} where a zero result maps to n.
constexpr Position ModAdd(Position i, long long k, int n) {
  return static_cast<Position>((i - 1 + k) % n) + 1;
}

// Outcome of laying out one block when the first free position is `i`.
struct PlacementStep {
  Position alpha = 0;  // first occurrence of a block element
  Position omega = 0;  // last occurrence
  int delta = 0;       // 1 if the block ends at n or spills into the next segment

  friend bool operator==(const PlacementStep&, const PlacementStep&) = default;
};

// Validates `block` (non-empty, strictly increasing, within [1, n]) and `i`.
PlacementStep PlaceBlock(Position i, std::span<const int> block, int n);

// Same as PlaceBlock without argument checks; `block` must be valid.
inline PlacementStep PlaceBlockUnchecked(Position i, std::span<const int> block,
                                         int n) {
  const int first = block.front();
  const int last = block.back();
  if (i <= first) return {first, last, last < n ? 0 : 1};
  if (last < i) return {first, last, 1};
  // Smallest element >= i; it exists and is not the first one.
  size_t lo = 0, hi = block.size() - 1;
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    if (block[mid] >= i) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {block[hi], block[hi - 1], 1};
}

struct Simulation {
  int segments = 0;
  std::vector<PlacementStep> steps;
  // track_of[r-1] is the 1-based track (segment) of railcar r.
  std::vector<int> track_of;
};

// Lays out blocks in `order` starting from position 1 and reports the number
// of segments used together with a per-railcar track assignment. Throws
// std::invalid_argument if `order` is not a permutation of the block ids.
Simulation SimulateOrder(const Instance& instance, std::span<const int> order);

// Segment count only; `order` must be a valid permutation.
int OrderCost(const Instance& instance, std::span<const int> order);

}  // namespace marshal

#endif  // MARSHAL_PLACEMENT_H_

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

#ifndef MARSHAL_PREPROCESS_H_
#define MARSHAL_PREPROCESS_H_

#include <vector>

#include "marshal/instance.h"

namespace marshal {

struct ShrinkReport {
  int original_n = 0;
  int reduced_n = 0;
  std::vector<int> removed;  // original railcar ids, increasing
  // car_map[r-1] lists the original railcars represented by reduced railcar r.
  std::vector<std::vector<int>> car_map;
};

struct ShrinkResult {
  Instance instance;
  ShrinkReport report;
};

// Keeps only the first railcar of every maximal run of consecutive railcars
// with the same destination. Railcars n and 1 are not consecutive.
ShrinkResult Shrink(const Instance& instance);

// Maps a per-railcar assignment of the reduced instance back to the original
// railcars.
std::vector<int> ExpandAssignment(const ShrinkReport& report,
                                  const std::vector<int>& reduced);

// min{t, ceil(n/4 + 1/2)}, an upper bound on the optimal track count.
int UpperBound(const Instance& instance);

}  // namespace marshal

#endif  // MARSHAL_PREPROCESS_H_

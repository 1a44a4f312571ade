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

#include "marshal/preprocess.h"

#include <algorithm>

namespace marshal {

ShrinkResult Shrink(const Instance& instance) {
  const auto labels = instance.DestinationLabels();
  ShrinkReport report;
  report.original_n = instance.n();
  std::vector<int> kept;
  for (int r = 1; r <= instance.n(); ++r) {
    if (r > 1 && labels[r - 1] == labels[r - 2]) {
      report.removed.push_back(r);
      report.car_map.back().push_back(r);
    } else {
      kept.push_back(labels[r - 1]);
      report.car_map.push_back({r});
    }
  }
  report.reduced_n = static_cast<int>(kept.size());
  return {Instance::FromDestinations(kept, instance.t()), std::move(report)};
}

std::vector<int> ExpandAssignment(const ShrinkReport& report,
                                  const std::vector<int>& reduced) {
  std::vector<int> expanded(report.original_n, 0);
  for (size_t r = 0; r < report.car_map.size(); ++r) {
    for (int original : report.car_map[r]) expanded[original - 1] = reduced[r];
  }
  return expanded;
}

int UpperBound(const Instance& instance) {
  // ceil(n/4 + 1/2) = ceil((n + 2) / 4).
  return std::min(instance.t(), (instance.n() + 5) / 4);
}

}  // namespace marshal

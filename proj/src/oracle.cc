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

#include "marshal/oracle.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "marshal/dp_solver.h"
#include "marshal/placement.h"

namespace marshal {

OracleResult OracleMin(
    const Instance& instance, int max_t,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (instance.t() > max_t) {
    throw std::invalid_argument("oracle refuses t = " +
                                std::to_string(instance.t()) + " > max_t = " +
                                std::to_string(max_t));
  }
  std::vector<int> order(instance.t());
  std::iota(order.begin(), order.end(), 0);

  OracleResult result;
  result.k_opt = std::numeric_limits<int>::max();
  do {
    if (deadline && (result.evaluated & 4095) == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      throw TimeLimitExceeded();
    }
    const int cost = SimulateOrder(instance, order).segments;
    ++result.evaluated;
    if (cost < result.k_opt) {
      result.k_opt = cost;
      result.best_orders.clear();
    }
    if (cost == result.k_opt && result.best_orders.size() < kMaxStoredOrders) {
      result.best_orders.push_back(order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace marshal

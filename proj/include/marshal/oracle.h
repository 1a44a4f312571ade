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

#ifndef MARSHAL_ORACLE_H_
#define MARSHAL_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "marshal/instance.h"

namespace marshal {

inline constexpr int kDefaultOracleMaxT = 8;
inline constexpr size_t kMaxStoredOrders = 100;

struct OracleResult {
  int k_opt = 0;
  // Optimal orders in lexicographic order, at most kMaxStoredOrders of them.
  std::vector<std::vector<int>> best_orders;
  uint64_t evaluated = 0;
};

// Exhaustive minimum over all t! block orders, each scored by SimulateOrder.
// Throws std::invalid_argument when t > max_t and TimeLimitExceeded when the
// deadline passes.
OracleResult OracleMin(
    const Instance& instance, int max_t = kDefaultOracleMaxT,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace marshal

#endif  // MARSHAL_ORACLE_H_

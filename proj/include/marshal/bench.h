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

#ifndef MARSHAL_BENCH_H_
#define MARSHAL_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marshal/oracle.h"
#include "marshal/pipeline.h"

namespace marshal {

struct BenchConfig {
  std::vector<int> n_list;
  std::vector<int> t_list;
  int count = 10;
  uint64_t seed = 1;
  std::vector<Method> methods = {Method::kMemoized};
  double time_limit_seconds = 60.0;
  bool shrink = true;
  bool bottom_up_lemmas = false;
  int oracle_max_t = kDefaultOracleMaxT;
  // Cells solved concurrently. Timings inside a cell are always sequential,
  // but concurrent cells compete for cores and memory bandwidth.
  int jobs = 1;
};

enum class RowStatus { kOk, kTimeLimitExceeded, kNotApplicable };

struct BenchRow {
  int n = 0;
  int t = 0;
  Method method = Method::kMemoized;
  int instances = 0;
  RowStatus status = RowStatus::kOk;
  double mean_time = 0.0;  // seconds
  double max_time = 0.0;
  double mean_entries_computed = 0.0;
  // Every instance of the cell got the same k_opt from all methods that
  // finished it.
  bool all_optima_agree = true;
  // Per-instance optimum; -1 where this method did not finish.
  std::vector<int> optima;
};

// Rows are ordered by n, then t, then the order of config.methods.
std::vector<BenchRow> RunBench(const BenchConfig& config);

std::string FormatCsv(const std::vector<BenchRow>& rows);
std::string FormatText(const std::vector<BenchRow>& rows);

}  // namespace marshal

#endif  // MARSHAL_BENCH_H_

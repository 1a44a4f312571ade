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

#include "marshal/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "marshal/generator.h"
#include "marshal/preprocess.h"

namespace marshal {

namespace {

using Clock = std::chrono::steady_clock;

struct Cell {
  int n;
  int t;
};

BenchRow RunMethod(const std::vector<Instance>& instances, const Cell& cell,
                   Method method, const BenchConfig& config) {
  BenchRow row;
  row.n = cell.n;
  row.t = cell.t;
  row.method = method;
  row.instances = static_cast<int>(instances.size());
  row.optima.assign(instances.size(), -1);
  if (method == Method::kOracle && cell.t > config.oracle_max_t) {
    row.status = RowStatus::kNotApplicable;
    return row;
  }

  PipelineOptions options;
  options.method = method;
  options.bottom_up_lemmas = config.bottom_up_lemmas;
  options.oracle_max_t = config.oracle_max_t;
  const auto limit = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(config.time_limit_seconds));

  try {
    // Warm-up, discarded.
    options.deadline = Clock::now() + limit;
    SolveWith(instances.front(), options);

    double total_time = 0.0;
    double total_entries = 0.0;
    for (size_t k = 0; k < instances.size(); ++k) {
      const auto start = Clock::now();
      options.deadline = start + limit;
      const SolveResult result = SolveWith(instances[k], options);
      const double seconds =
          std::chrono::duration<double>(Clock::now() - start).count();
      total_time += seconds;
      row.max_time = std::max(row.max_time, seconds);
      total_entries += static_cast<double>(result.stats.entries_computed);
      row.optima[k] = result.k_opt;
    }
    row.mean_time = total_time / static_cast<double>(instances.size());
    row.mean_entries_computed =
        total_entries / static_cast<double>(instances.size());
  } catch (const TimeLimitExceeded&) {
    row.status = RowStatus::kTimeLimitExceeded;
  }
  return row;
}

std::vector<BenchRow> RunCell(const Cell& cell, const BenchConfig& config) {
  std::vector<Instance> instances =
      Generate({cell.n, cell.t, config.seed, config.count});
  if (config.shrink) {
    for (auto& instance : instances) instance = Shrink(instance).instance;
  }
  std::vector<BenchRow> rows;
  for (Method method : config.methods) {
    rows.push_back(RunMethod(instances, cell, method, config));
  }
  bool agree = true;
  for (size_t k = 0; k < instances.size(); ++k) {
    int seen = -1;
    for (const auto& row : rows) {
      const int value = row.optima[k];
      if (value < 0) continue;
      if (seen >= 0 && value != seen) agree = false;
      seen = value;
    }
  }
  for (auto& row : rows) row.all_optima_agree = agree;
  return rows;
}

std::string TimeField(const BenchRow& row, double seconds) {
  switch (row.status) {
    case RowStatus::kTimeLimitExceeded:
      return "TLE";
    case RowStatus::kNotApplicable:
      return "n/a";
    case RowStatus::kOk:
      break;
  }
  std::ostringstream out;
  out << std::setprecision(6) << seconds;
  return out.str();
}

std::string EntriesField(const BenchRow& row) {
  if (row.status != RowStatus::kOk) return TimeField(row, 0.0);
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << row.mean_entries_computed;
  return out.str();
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  std::vector<Cell> cells;
  for (int n : config.n_list) {
    for (int t : config.t_list) cells.push_back({n, t});
  }
  std::vector<std::vector<BenchRow>> per_cell(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t c = next++; c < cells.size(); c = next++) {
      per_cell[c] = RunCell(cells[c], config);
    }
  };
  const int jobs =
      std::clamp(config.jobs, 1, std::max<int>(1, static_cast<int>(cells.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }
  std::vector<BenchRow> rows;
  for (auto& cell_rows : per_cell) {
    rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  }
  return rows;
}

std::string FormatCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,t,method,instances,mean_time,max_time,mean_entries_computed,"
         "all_optima_agree\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.t << ',' << MethodName(row.method) << ','
        << row.instances << ',' << TimeField(row, row.mean_time) << ','
        << TimeField(row, row.max_time) << ',' << EntriesField(row) << ','
        << (row.all_optima_agree ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string FormatText(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(7) << "n" << std::setw(5) << "t"
      << std::setw(10) << "method" << std::right << std::setw(10)
      << "instances" << std::setw(14) << "mean_time(s)" << std::setw(14)
      << "max_time(s)" << std::setw(16) << "mean_entries" << std::setw(8)
      << "agree" << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(7) << row.n << std::setw(5) << row.t
        << std::setw(10) << MethodName(row.method) << std::right
        << std::setw(10) << row.instances << std::setw(14)
        << TimeField(row, row.mean_time) << std::setw(14)
        << TimeField(row, row.max_time) << std::setw(16) << EntriesField(row)
        << std::setw(8) << (row.all_optima_agree ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace marshal

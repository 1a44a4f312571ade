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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace marshal {
namespace {

TEST(BenchTest, EmptyGridGivesEmptyTable) {
  BenchConfig config;
  const auto rows = RunBench(config);
  EXPECT_TRUE(rows.empty());
  EXPECT_EQ(FormatCsv(rows),
            "n,t,method,instances,mean_time,max_time,mean_entries_computed,"
            "all_optima_agree\n");
}

TEST(BenchTest, MethodsAgreeAndMemoizedDoesLessWork) {
  BenchConfig config;
  config.n_list = {50, 100};
  config.t_list = {5, 7};
  config.count = 10;
  config.seed = 11;
  config.methods = {Method::kMemoized, Method::kBottomUp, Method::kOracle};
  const auto rows = RunBench(config);
  ASSERT_EQ(rows.size(), 12u);
  for (size_t cell = 0; cell < 4; ++cell) {
    const BenchRow& memo = rows[3 * cell];
    const BenchRow& bottom_up = rows[3 * cell + 1];
    const BenchRow& oracle = rows[3 * cell + 2];
    EXPECT_EQ(memo.method, Method::kMemoized);
    EXPECT_EQ(oracle.method, Method::kOracle);
    EXPECT_TRUE(memo.all_optima_agree);
    EXPECT_EQ(memo.optima, oracle.optima);
    EXPECT_EQ(bottom_up.optima, oracle.optima);
    EXPECT_EQ(memo.status, RowStatus::kOk);
    EXPECT_LE(memo.mean_entries_computed, bottom_up.mean_entries_computed);
    EXPECT_GE(memo.max_time, memo.mean_time);
  }
}

TEST(BenchTest, ContentIsDeterministicApartFromTiming) {
  BenchConfig config;
  config.n_list = {30};
  config.t_list = {4, 6};
  config.count = 4;
  config.methods = {Method::kMemoized, Method::kBottomUp};
  const auto first = RunBench(config);
  config.jobs = 2;
  const auto second = RunBench(config);
  ASSERT_EQ(first.size(), second.size());
  for (size_t k = 0; k < first.size(); ++k) {
    EXPECT_EQ(first[k].n, second[k].n);
    EXPECT_EQ(first[k].t, second[k].t);
    EXPECT_EQ(first[k].method, second[k].method);
    EXPECT_EQ(first[k].optima, second[k].optima);
    EXPECT_EQ(first[k].mean_entries_computed, second[k].mean_entries_computed);
  }
}

TEST(BenchTest, TimeLimitIsReportedAndLaterRowsSurvive) {
  BenchConfig config;
  config.n_list = {400};
  config.t_list = {16, 4};
  config.count = 2;
  config.time_limit_seconds = 0.001;
  config.methods = {Method::kBottomUp, Method::kOracle};
  const auto rows = RunBench(config);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].status, RowStatus::kTimeLimitExceeded);
  EXPECT_EQ(rows[1].status, RowStatus::kNotApplicable);
  const std::string csv = FormatCsv(rows);
  EXPECT_NE(csv.find("400,16,bottomup,2,TLE,TLE,TLE,true"), std::string::npos)
      << csv;
  EXPECT_NE(csv.find("400,16,oracle,2,n/a,n/a,n/a,true"), std::string::npos);
  // The t = 4 cell is small enough to finish despite the tiny limit.
  BenchConfig small = config;
  small.t_list = {4};
  small.time_limit_seconds = 10.0;
  const auto ok = RunBench(small);
  EXPECT_EQ(ok[0].status, RowStatus::kOk);
  EXPECT_EQ(ok[1].status, RowStatus::kOk);
  EXPECT_EQ(rows[3].t, 4);
}

}  // namespace
}  // namespace marshal

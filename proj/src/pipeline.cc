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

#include "marshal/pipeline.h"

#include "marshal/placement.h"
#include "marshal/preprocess.h"

namespace marshal {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kBottomUp:
      return "bottomup";
    case Method::kMemoized:
      return "memoized";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (Method m : {Method::kBottomUp, Method::kMemoized, Method::kOracle}) {
    if (MethodName(m) == name) return m;
  }
  return std::nullopt;
}

SolveResult SolveWith(const Instance& instance, const PipelineOptions& options) {
  DpOptions dp;
  dp.deadline = options.deadline;
  switch (options.method) {
    case Method::kBottomUp:
      dp.use_lemmas = options.bottom_up_lemmas;
      return SolveBottomUp(instance, dp).result;
    case Method::kMemoized:
      return SolveMemoized(instance, dp).result;
    case Method::kOracle: {
      const auto start = std::chrono::steady_clock::now();
      OracleResult oracle =
          OracleMin(instance, options.oracle_max_t, options.deadline);
      SolveResult result;
      result.k_opt = oracle.k_opt;
      result.order = std::move(oracle.best_orders.front());
      result.track_of = SimulateOrder(instance, result.order).track_of;
      result.stats.wall_time = std::chrono::steady_clock::now() - start;
      return result;
    }
  }
  return {};
}

PipelineResult SolveInstance(const Instance& instance,
                             const PipelineOptions& options) {
  if (!options.shrink) {
    return {SolveWith(instance, options), instance.n()};
  }
  ShrinkResult shrunk = Shrink(instance);
  PipelineResult out{SolveWith(shrunk.instance, options), shrunk.report.reduced_n};
  out.result.track_of = ExpandAssignment(shrunk.report, out.result.track_of);
  return out;
}

}  // namespace marshal

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

#ifndef MARSHAL_PIPELINE_H_
#define MARSHAL_PIPELINE_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "marshal/dp_solver.h"
#include "marshal/instance.h"
#include "marshal/oracle.h"

namespace marshal {

enum class Method { kBottomUp, kMemoized, kOracle };

std::string_view MethodName(Method method);
// Accepts "bottomup", "memoized" or "oracle".
std::optional<Method> ParseMethod(std::string_view name);

struct PipelineOptions {
  Method method = Method::kMemoized;
  bool shrink = true;
  bool bottom_up_lemmas = false;
  int oracle_max_t = kDefaultOracleMaxT;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Solves an instance that needs no further preprocessing. For the oracle the
// order is the lexicographically first optimum and stats stay zero apart
// from wall_time.
SolveResult SolveWith(const Instance& instance, const PipelineOptions& options);

struct PipelineResult {
  SolveResult result;  // track_of refers to the original railcars
  int reduced_n = 0;
};

// Optionally shrinks, solves, and maps the assignment back to the input.
PipelineResult SolveInstance(const Instance& instance,
                             const PipelineOptions& options);

}  // namespace marshal

#endif  // MARSHAL_PIPELINE_H_

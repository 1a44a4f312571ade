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

#ifndef MARSHAL_DP_SOLVER_H_
#define MARSHAL_DP_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "marshal/block_set.h"
#include "marshal/instance.h"

namespace marshal {

class TimeLimitExceeded : public std::runtime_error {
 public:
  TimeLimitExceeded() : std::runtime_error("time limit exceeded") {}
};

struct SolverStats {
  // Candidate evaluations delta(i,B) + K[omega(i,B)+1, B' \ {B}].
  uint64_t min_evaluations = 0;
  // Cells whose value was obtained by evaluating the recurrence.
  uint64_t entries_computed = 0;
  // Extra cells written by copying a computed value across its interval.
  uint64_t entries_filled_by_lemma = 0;
  // Reads of K[h+1, B'] with h a railcar of some block in B'. Such rows are
  // never needed, so this stays zero for a correct solver.
  uint64_t unneeded_row_reads = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Value table K and witness table T, both indexed by (row, BlockSet) with
// rows in [1, n]. Stored densely, one byte per cell, column by column.
class DpTables {
 public:
  static constexpr uint8_t kUnset = 0xFF;

  DpTables(int n, int t);

  int n() const { return n_; }
  int t() const { return t_; }

  uint8_t value(Position i, BlockSet set) const { return value_[Index(i, set)]; }
  uint8_t choice(Position i, BlockSet set) const {
    return choice_[Index(i, set)];
  }
  bool is_set(Position i, BlockSet set) const {
    return value(i, set) != kUnset;
  }

  void Set(Position i, BlockSet set, uint8_t value, uint8_t choice) {
    value_[Index(i, set)] = value;
    choice_[Index(i, set)] = choice;
  }

  // K[1, {}] = 0 and K[i, {}] = 1 for every other row.
  void InitEmptyColumn();

  // Contiguous rows of one column.
  std::span<uint8_t> values(BlockSet set) {
    return {value_.data() + static_cast<size_t>(set.bits()) * n_,
            static_cast<size_t>(n_)};
  }
  std::span<uint8_t> choices(BlockSet set) {
    return {choice_.data() + static_cast<size_t>(set.bits()) * n_,
            static_cast<size_t>(n_)};
  }

 private:
  size_t Index(Position i, BlockSet set) const {
    return static_cast<size_t>(set.bits()) * n_ + (i - 1);
  }

  int n_;
  int t_;
  std::vector<uint8_t> value_;
  std::vector<uint8_t> choice_;
};

struct SolveResult {
  int k_opt = 0;
  std::vector<int> order;     // block ids, first block placed first
  std::vector<int> track_of;  // track_of[r-1] in [1, k_opt]
  SolverStats stats;
};

struct DpSolution {
  SolveResult result;
  DpTables tables;
};

struct DpOptions {
  // Bottom-up only: skip rows that are never read and evaluate one row per
  // interval of equal values, copying the result to the rest.
  bool use_lemmas = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Fills every column of size 1..t-1 in order of increasing size, then the
// single cell K[1, all blocks].
DpSolution SolveBottomUp(const Instance& instance, const DpOptions& options = {});

// Top-down evaluation of only the cells reachable from K[1, all blocks]. Each
// computed value is written to every row of its interval of equal values.
DpSolution SolveMemoized(const Instance& instance, const DpOptions& options = {});

// Follows the witness table from (1, all blocks). Throws std::logic_error on
// an unset witness.
std::vector<int> ReconstructOrder(const Instance& instance,
                                  const DpTables& tables);

// Block id with the smallest value, lowest id on ties. Candidates are
// (block id, value) pairs; throws std::invalid_argument if empty.
int ArgminChoice(std::span<const std::pair<int, int>> candidates);

// Increasing list of all railcars belonging to blocks in `set`.
std::vector<int> SortedUnion(const Instance& instance, BlockSet set);

// Maximal row intervals of a column over which K is constant:
// [1, i_1], [i_l + 1, i_{l+1}] and [i_last + 1, n], for the sorted union
// <i_1, ..., i_last> of `set`. Empty intervals are omitted.
std::vector<std::pair<Position, Position>> EqualValueIntervals(
    const Instance& instance, BlockSet set);

}  // namespace marshal

#endif  // MARSHAL_DP_SOLVER_H_

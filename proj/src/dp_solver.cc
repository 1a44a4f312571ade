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

#include "marshal/dp_solver.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "marshal/placement.h"

namespace marshal {

namespace {

using Clock = std::chrono::steady_clock;

// delta(i, B) and omega(i, B) +_n 1 for every block and row.
class StepTable {
 public:
  explicit StepTable(const Instance& instance)
      : n_(instance.n()),
        next_(static_cast<size_t>(instance.t()) * n_),
        delta_(next_.size()) {
    for (int b = 0; b < instance.t(); ++b) {
      for (Position i = 1; i <= n_; ++i) {
        const PlacementStep step = PlaceBlockUnchecked(i, instance.block(b), n_);
        next_[Slot(b, i)] = ModAdd(step.omega, 1, n_);
        delta_[Slot(b, i)] = static_cast<uint8_t>(step.delta);
      }
    }
  }

  Position next(int b, Position i) const { return next_[Slot(b, i)]; }
  uint8_t delta(int b, Position i) const { return delta_[Slot(b, i)]; }

 private:
  size_t Slot(int b, Position i) const {
    return static_cast<size_t>(b) * n_ + (i - 1);
  }

  int n_;
  std::vector<Position> next_;
  std::vector<uint8_t> delta_;
};

void CheckSolvable(const Instance& instance) {
  if (instance.t() > kMaxBlocks) {
    throw std::invalid_argument("t = " + std::to_string(instance.t()) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxBlocks));
  }
}

void CheckDeadline(const DpOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) {
    throw TimeLimitExceeded();
  }
}

// Evaluates the recurrence at (i, set) against already-filled child columns.
// Returns {value, witness}.
std::pair<uint8_t, uint8_t> Evaluate(const StepTable& steps,
                                     const DpTables& tables, Position i,
                                     BlockSet set, SolverStats& stats) {
  int best = std::numeric_limits<int>::max();
  int witness = -1;
  set.ForEach([&](int b) {
    const uint8_t child = tables.value(steps.next(b, i), set.Without(b));
    if (child == DpTables::kUnset) {
      throw std::logic_error("recurrence read an unset cell");
    }
    const int candidate = steps.delta(b, i) + child;
    ++stats.min_evaluations;
    if (candidate < best) {
      best = candidate;
      witness = b;
    }
  });
  return {static_cast<uint8_t>(best), static_cast<uint8_t>(witness)};
}

// Fills K[1, all blocks], reconstructs and simulates the optimal order.
DpSolution Finish(const Instance& instance, const StepTable& steps,
                  DpTables tables, SolverStats stats, Clock::time_point start) {
  const BlockSet all = BlockSet::Full(instance.t());
  const auto [value, witness] = Evaluate(steps, tables, 1, all, stats);
  tables.Set(1, all, value, witness);
  ++stats.entries_computed;

  SolveResult result;
  result.k_opt = value;
  result.order = ReconstructOrder(instance, tables);
  Simulation sim = SimulateOrder(instance, result.order);
  if (sim.segments != result.k_opt) {
    throw std::logic_error("reconstructed order costs " +
                           std::to_string(sim.segments) + " segments, table says " +
                           std::to_string(result.k_opt));
  }
  result.track_of = std::move(sim.track_of);
  stats.wall_time = Clock::now() - start;
  result.stats = stats;
  return {std::move(result), std::move(tables)};
}

// Visits subsets of {0..t-1} of size `size` in increasing integer order.
template <typename Fn>
void ForEachSubsetOfSize(int t, int size, Fn&& fn) {
  if (size == 0 || size > t) return;
  const uint64_t limit = uint64_t{1} << t;
  uint64_t set = (uint64_t{1} << size) - 1;
  while (set < limit) {
    fn(BlockSet(static_cast<uint32_t>(set)));
    // Next integer with the same popcount.
    const uint64_t low = set & (~set + 1);
    const uint64_t ripple = set + low;
    set = ripple | (((set ^ ripple) >> 2) / low);
  }
}

class MemoizedSolver {
 public:
  MemoizedSolver(const Instance& instance, const StepTable& steps,
                 DpTables& tables, SolverStats& stats, const DpOptions& options)
      : instance_(instance),
        steps_(steps),
        tables_(tables),
        stats_(stats),
        options_(options) {}

  uint8_t Lookup(Position i, BlockSet set) {
    if (!set.empty() && InUnion(set, ModAdd(i, instance_.n() - 1, instance_.n()))) {
      ++stats_.unneeded_row_reads;
    }
    const uint8_t cached = tables_.value(i, set);
    if (cached != DpTables::kUnset) return cached;

    if ((++computed_since_check_ & 1023) == 0) CheckDeadline(options_);

    int best = std::numeric_limits<int>::max();
    int witness = -1;
    set.ForEach([&](int b) {
      const int candidate =
          steps_.delta(b, i) + Lookup(steps_.next(b, i), set.Without(b));
      ++stats_.min_evaluations;
      if (candidate < best) {
        best = candidate;
        witness = b;
      }
    });
    ++stats_.entries_computed;
    FillInterval(i, set, static_cast<uint8_t>(best),
                 static_cast<uint8_t>(witness));
    return static_cast<uint8_t>(best);
  }

 private:
  bool InUnion(BlockSet set, Position railcar) const {
    return set.Contains(instance_.block_of(railcar));
  }

  // Writes the value to the rows that share it with row i: [1, i_1],
  // [i_l + 2, i_{l+1}] or [i_last + 2, n]. Row i_l + 1 is never queried; if
  // it is, it gets filled too.
  void FillInterval(Position i, BlockSet set, uint8_t value, uint8_t witness) {
    const int n = instance_.n();
    Position below = i - 1;  // largest union element < i, or 0
    while (below >= 1 && !InUnion(set, below)) --below;
    Position above = i;  // smallest union element >= i, or n + 1
    while (above <= n && !InUnion(set, above)) ++above;

    Position first = 1;
    const Position last = above <= n ? above : n;
    if (below >= 1) first = i == below + 1 ? i : below + 2;

    auto values = tables_.values(set);
    auto choices = tables_.choices(set);
    for (Position r = first; r <= last; ++r) {
      values[r - 1] = value;
      choices[r - 1] = witness;
    }
    stats_.entries_filled_by_lemma += static_cast<uint64_t>(last - first);
  }

  const Instance& instance_;
  const StepTable& steps_;
  DpTables& tables_;
  SolverStats& stats_;
  const DpOptions& options_;
  uint64_t computed_since_check_ = 0;
};

}  // namespace

DpTables::DpTables(int n, int t) : n_(n), t_(t) {
  if (n < 1 || t < 1 || t > kMaxBlocks) {
    throw std::invalid_argument("table dimensions out of range");
  }
  const size_t cells = (size_t{1} << t) * static_cast<size_t>(n);
  value_.assign(cells, kUnset);
  choice_.assign(cells, kUnset);
}

void DpTables::InitEmptyColumn() {
  auto column = values(BlockSet());
  std::fill(column.begin(), column.end(), uint8_t{1});
  column[0] = 0;
}

DpSolution SolveBottomUp(const Instance& instance, const DpOptions& options) {
  CheckSolvable(instance);
  const auto start = Clock::now();
  const int n = instance.n();
  const int t = instance.t();
  const StepTable steps(instance);
  DpTables tables(n, t);
  tables.InitEmptyColumn();
  SolverStats stats;

  std::vector<bool> member(n + 1);
  for (int size = 1; size <= t - 1; ++size) {
    ForEachSubsetOfSize(t, size, [&](BlockSet set) {
      CheckDeadline(options);
      if (!options.use_lemmas) {
        for (Position i = 1; i <= n; ++i) {
          const auto [value, witness] = Evaluate(steps, tables, i, set, stats);
          tables.Set(i, set, value, witness);
        }
        stats.entries_computed += n;
        return;
      }
      // One evaluation per interval of equal values; rows right after a
      // union element stay unset because nothing reads them.
      auto values = tables.values(set);
      auto choices = tables.choices(set);
      auto fill = [&](Position first, Position last) {
        if (first > last) return;
        const auto [value, witness] = Evaluate(steps, tables, first, set, stats);
        std::fill(values.begin() + (first - 1), values.begin() + last, value);
        std::fill(choices.begin() + (first - 1), choices.begin() + last, witness);
        ++stats.entries_computed;
        stats.entries_filled_by_lemma += static_cast<uint64_t>(last - first);
      };
      Position first = 1;
      for (Position r = 1; r <= n; ++r) {
        if (set.Contains(instance.block_of(r))) {
          fill(first, r);
          first = r + 2;
        }
      }
      fill(first, n);
    });
  }
  return Finish(instance, steps, std::move(tables), stats, start);
}

DpSolution SolveMemoized(const Instance& instance, const DpOptions& options) {
  CheckSolvable(instance);
  const auto start = Clock::now();
  const StepTable steps(instance);
  DpTables tables(instance.n(), instance.t());
  tables.InitEmptyColumn();
  SolverStats stats;

  MemoizedSolver solver(instance, steps, tables, stats, options);
  const BlockSet all = BlockSet::Full(instance.t());
  all.ForEach([&](int b) { solver.Lookup(steps.next(b, 1), all.Without(b)); });
  CheckDeadline(options);
  return Finish(instance, steps, std::move(tables), stats, start);
}

std::vector<int> ReconstructOrder(const Instance& instance,
                                  const DpTables& tables) {
  std::vector<int> order;
  order.reserve(instance.t());
  BlockSet rest = BlockSet::Full(instance.t());
  Position i = 1;
  while (!rest.empty()) {
    const uint8_t b = tables.choice(i, rest);
    if (b == DpTables::kUnset || !rest.Contains(b)) {
      throw std::logic_error("no valid witness at row " + std::to_string(i));
    }
    order.push_back(b);
    i = ModAdd(PlaceBlockUnchecked(i, instance.block(b), instance.n()).omega, 1,
               instance.n());
    rest = rest.Without(b);
  }
  return order;
}

int ArgminChoice(std::span<const std::pair<int, int>> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  auto best = candidates.front();
  for (const auto& c : candidates.subspan(1)) {
    if (c.second < best.second ||
        (c.second == best.second && c.first < best.first)) {
      best = c;
    }
  }
  return best.first;
}

std::vector<int> SortedUnion(const Instance& instance, BlockSet set) {
  std::vector<int> sigma;
  for (int r = 1; r <= instance.n(); ++r) {
    if (set.Contains(instance.block_of(r))) sigma.push_back(r);
  }
  return sigma;
}

std::vector<std::pair<Position, Position>> EqualValueIntervals(
    const Instance& instance, BlockSet set) {
  std::vector<std::pair<Position, Position>> intervals;
  Position first = 1;
  for (int r : SortedUnion(instance, set)) {
    if (first <= r) intervals.emplace_back(first, r);
    first = r + 1;
  }
  if (first <= instance.n()) intervals.emplace_back(first, instance.n());
  return intervals;
}

}  // namespace marshal

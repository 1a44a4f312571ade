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

#ifndef MARSHAL_BLOCK_SET_H_
#define MARSHAL_BLOCK_SET_H_

#include <bit>
#include <cstdint>

namespace marshal {

// Largest destination count the table-based solvers accept. The K and T
// tables hold n * 2^t cells each.
inline constexpr int kMaxBlocks = 24;

// A subset of block ids {0, ..., t-1} stored as a bit mask.
class BlockSet {
 public:
  constexpr BlockSet() = default;
  constexpr explicit BlockSet(uint32_t bits) : bits_(bits) {}

  static constexpr BlockSet Full(int t) {
    return BlockSet(t >= 32 ? ~uint32_t{0} : (uint32_t{1} << t) - 1);
  }
  static constexpr BlockSet Singleton(int block) {
    return BlockSet(uint32_t{1} << block);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool Contains(int block) const { return (bits_ >> block) & 1u; }
  constexpr BlockSet With(int block) const {
    return BlockSet(bits_ | (uint32_t{1} << block));
  }
  constexpr BlockSet Without(int block) const {
    return BlockSet(bits_ & ~(uint32_t{1} << block));
  }

  // Calls fn(block) for every member, in increasing id order.
  template <typename Fn>
  constexpr void ForEach(Fn&& fn) const {
    for (uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  friend constexpr bool operator==(BlockSet, BlockSet) = default;

 private:
  uint32_t bits_ = 0;
};

}  // namespace marshal

#endif  // MARSHAL_BLOCK_SET_H_

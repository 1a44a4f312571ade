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

#ifndef MARSHAL_GENERATOR_H_
#define MARSHAL_GENERATOR_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "marshal/instance.h"

namespace marshal {

// xoshiro256** 1.0 (Blackman and Vigna), state expanded from a 64-bit seed
// with splitmix64. Output is identical on every platform.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(uint64_t seed);

  uint64_t Next();
  // Uniform in [0, bound) by rejection; bound > 0.
  uint64_t Below(uint64_t bound);

 private:
  std::array<uint64_t, 4> state_;
};

struct GenSpec {
  int n = 0;
  int t = 0;
  uint64_t seed = 0;
  int count = 1;
};

// Instance `index` of a spec uses the stream seeded with seed + index.
// Destinations are uniform in [1, t]; each destination left unused is then
// given, in increasing label order, to the lowest railcar whose destination
// occurs more than once.
Instance GenerateOne(int n, int t, uint64_t seed);
std::vector<Instance> Generate(const GenSpec& spec);

// tmp_n<N>_t<T>_s<SEED>_<IDX>.txt
std::string InstanceFileName(const GenSpec& spec, int index);

}  // namespace marshal

#endif  // MARSHAL_GENERATOR_H_

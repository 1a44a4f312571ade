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

#include "marshal/generator.h"

#include <bit>
#include <stdexcept>

namespace marshal {

namespace {

uint64_t SplitMix64(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(uint64_t seed) {
  for (auto& word : state_) word = SplitMix64(seed);
}

uint64_t Xoshiro256StarStar::Next() {
  const uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const uint64_t shifted = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= shifted;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

uint64_t Xoshiro256StarStar::Below(uint64_t bound) {
  // Reject the low values that would bias `value % bound`.
  const uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const uint64_t value = Next();
    if (value >= threshold) return value % bound;
  }
}

Instance GenerateOne(int n, int t, uint64_t seed) {
  if (t < 1 || n < t) throw std::invalid_argument("generator needs n >= t >= 1");
  Xoshiro256StarStar rng(seed);
  std::vector<int> destinations(n);
  std::vector<int> uses(t + 1, 0);
  for (int& d : destinations) {
    d = static_cast<int>(rng.Below(static_cast<uint64_t>(t))) + 1;
    ++uses[d];
  }
  for (int label = 1; label <= t; ++label) {
    if (uses[label] > 0) continue;
    for (int& d : destinations) {
      if (uses[d] > 1) {
        --uses[d];
        d = label;
        ++uses[label];
        break;
      }
    }
  }
  return Instance::FromDestinations(destinations, t);
}

std::vector<Instance> Generate(const GenSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("count must be positive");
  std::vector<Instance> instances;
  instances.reserve(spec.count);
  for (int k = 0; k < spec.count; ++k) {
    instances.push_back(GenerateOne(spec.n, spec.t, spec.seed + k));
  }
  return instances;
}

std::string InstanceFileName(const GenSpec& spec, int index) {
  return "tmp_n" + std::to_string(spec.n) + "_t" + std::to_string(spec.t) +
         "_s" + std::to_string(spec.seed) + "_" + std::to_string(index) + ".txt";
}

}  // namespace marshal

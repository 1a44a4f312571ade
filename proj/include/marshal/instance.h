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

#ifndef MARSHAL_INSTANCE_H_
#define MARSHAL_INSTANCE_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace marshal {

// Railcars and positions are 1-based everywhere in the public API.
using Position = int;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A train marshalling instance: n railcars with t destinations. Each block is
// the increasing list of railcars that share a destination. Block ids are
// canonical: block 0 holds railcar 1, and ids grow with each block's smallest
// railcar. The destination label each block had in the input is kept so
// results can be reported in the caller's numbering.
class Instance {
 public:
  // `destinations[r-1]` is the label of railcar r; labels must cover exactly
  // 1..t.
  static Instance FromDestinations(std::span<const int> destinations, int t);

  // Builds an instance from explicit blocks. Labels default to the position
  // of each block in `blocks` plus one.
  static Instance FromBlocks(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int t() const { return static_cast<int>(blocks_.size()); }

  const std::vector<int>& block(int id) const { return blocks_[id]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // Canonical block id of railcar r (1-based).
  int block_of(int railcar) const { return block_of_[railcar - 1]; }
  // Input destination label of a block.
  int label_of(int block_id) const { return label_of_[block_id]; }

  // Destination labels in railcar order, as they appeared in the input.
  std::vector<int> DestinationLabels() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
  std::vector<int> label_of_;
};

// Reads the plain-text instance format: '#' comment lines, a "<n> <t>"
// header, then n destination labels in [1, t].
Instance ParseInstance(std::string_view text);
Instance ReadInstanceFile(const std::string& path);

// Canonical text form; ParseInstance(EmitInstance(x)) == x.
std::string EmitInstance(const Instance& instance);

}  // namespace marshal

#endif  // MARSHAL_INSTANCE_H_

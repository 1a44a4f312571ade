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

#include "marshal/instance.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace marshal {

namespace {

struct Token {
  std::string_view text;
  int line = 0;
};

bool ParseInt(std::string_view text, long long& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string Describe(const Token& token) {
  std::ostringstream out;
  out << "token '" << token.text << "' on line " << token.line;
  return out.str();
}

// Splits into whitespace-separated tokens grouped by line, dropping comment
// lines and trailing '\r'.
std::vector<std::vector<Token>> Tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      std::vector<Token> tokens;
      size_t pos = first;
      while (pos < line.size()) {
        const size_t stop = std::min(line.find_first_of(" \t", pos), line.size());
        tokens.push_back({line.substr(pos, stop - pos), line_no});
        pos = line.find_first_not_of(" \t", stop);
        if (pos == std::string_view::npos) break;
      }
      lines.push_back(std::move(tokens));
    }
    start = end + 1;
  }
  return lines;
}

}  // namespace

Instance Instance::FromDestinations(std::span<const int> destinations, int t) {
  const int n = static_cast<int>(destinations.size());
  if (n < 1) throw InvalidInstance("instance needs at least one railcar");
  if (t < 1 || t > n) {
    throw InvalidInstance("destination count must lie in [1, n]");
  }
  // Blocks in order of first appearance, which is canonical order.
  std::vector<int> block_of_label(t + 1, -1);
  Instance instance;
  instance.n_ = n;
  instance.block_of_.resize(n);
  for (int r = 1; r <= n; ++r) {
    const int label = destinations[r - 1];
    if (label < 1 || label > t) {
      throw InvalidInstance("railcar " + std::to_string(r) + " has destination " +
                            std::to_string(label) + " outside [1, " +
                            std::to_string(t) + "]");
    }
    if (block_of_label[label] < 0) {
      block_of_label[label] = static_cast<int>(instance.blocks_.size());
      instance.blocks_.emplace_back();
      instance.label_of_.push_back(label);
    }
    const int id = block_of_label[label];
    instance.blocks_[id].push_back(r);
    instance.block_of_[r - 1] = id;
  }
  for (int label = 1; label <= t; ++label) {
    if (block_of_label[label] < 0) {
      throw InvalidInstance("destination " + std::to_string(label) +
                            " is never used");
    }
  }
  return instance;
}

Instance Instance::FromBlocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1) throw InvalidInstance("instance needs at least one railcar");
  std::vector<int> destinations(n, 0);
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.empty()) throw InvalidInstance("empty block");
    for (size_t k = 0; k < block.size(); ++k) {
      const int r = block[k];
      if (r < 1 || r > n) throw InvalidInstance("railcar out of range");
      if (k > 0 && block[k - 1] >= r) {
        throw InvalidInstance("block is not strictly increasing");
      }
      if (destinations[r - 1] != 0) {
        throw InvalidInstance("railcar " + std::to_string(r) +
                              " appears in two blocks");
      }
      destinations[r - 1] = static_cast<int>(b) + 1;
    }
  }
  if (std::find(destinations.begin(), destinations.end(), 0) !=
      destinations.end()) {
    throw InvalidInstance("blocks do not cover every railcar");
  }
  return FromDestinations(destinations, static_cast<int>(blocks.size()));
}

std::vector<int> Instance::DestinationLabels() const {
  std::vector<int> labels(n_);
  for (int r = 1; r <= n_; ++r) labels[r - 1] = label_of_[block_of_[r - 1]];
  return labels;
}

Instance ParseInstance(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw ParseError("missing \"<n> <t>\" header");
  const auto& header = lines.front();
  if (header.size() != 2) {
    throw ParseError("header must be \"<n> <t>\", got " +
                     std::to_string(header.size()) + " tokens on line " +
                     std::to_string(header.front().line));
  }
  long long n = 0, t = 0;
  for (int k = 0; k < 2; ++k) {
    long long& value = k == 0 ? n : t;
    if (!ParseInt(header[k].text, value) || value < 1 || value > 100'000'000) {
      throw ParseError("malformed header " + Describe(header[k]));
    }
  }
  if (t > n) throw ParseError("header declares t > n");

  std::vector<int> destinations;
  destinations.reserve(n);
  for (size_t l = 1; l < lines.size(); ++l) {
    for (const Token& token : lines[l]) {
      long long label = 0;
      if (!ParseInt(token.text, label)) {
        throw ParseError("not an integer: " + Describe(token));
      }
      if (label < 1 || label > t) {
        throw ParseError("destination out of [1, " + std::to_string(t) +
                         "]: " + Describe(token));
      }
      if (static_cast<long long>(destinations.size()) == n) {
        throw ParseError("more than n = " + std::to_string(n) +
                         " destinations, extra " + Describe(token));
      }
      destinations.push_back(static_cast<int>(label));
    }
  }
  if (static_cast<long long>(destinations.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " destinations, found " +
                     std::to_string(destinations.size()));
  }
  try {
    return Instance::FromDestinations(destinations, static_cast<int>(t));
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string EmitInstance(const Instance& instance) {
  std::ostringstream out;
  out << instance.n() << ' ' << instance.t() << '\n';
  const auto labels = instance.DestinationLabels();
  for (size_t r = 0; r < labels.size(); ++r) {
    if (r > 0) out << ' ';
    out << labels[r];
  }
  out << '\n';
  return out.str();
}

}  // namespace marshal

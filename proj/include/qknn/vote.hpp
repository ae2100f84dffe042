// Copyright 2026 The qknn Authors
//
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

#ifndef QKNN_VOTE_HPP
#define QKNN_VOTE_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace qknn {

/// Majority class among `votes` with the smallest-mode tie rule: when two or
/// more classes are equally frequent, the smallest class id wins.
inline int smallest_mode(std::span<const int> votes, int num_classes) {
  if (votes.empty()) {
    throw std::invalid_argument("smallest_mode: empty vote list");
  }
  std::vector<int> counts(static_cast<std::size_t>(num_classes), 0);
  for (int v : votes) {
    if (v < 0 || v >= num_classes) {
      throw std::invalid_argument("smallest_mode: vote out of range");
    }
    ++counts[static_cast<std::size_t>(v)];
  }
  int best = 0;
  for (int c = 1; c < num_classes; ++c) {
    if (counts[static_cast<std::size_t>(c)] > counts[static_cast<std::size_t>(best)]) {
      best = c;  // strict improvement only, so ties keep the smaller id
    }
  }
  return best;
}

/// Index of the largest value; ties resolve to the smallest index.
inline int argmax_smallest(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("argmax_smallest: empty value list");
  }
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

}  // namespace qknn

#endif  // QKNN_VOTE_HPP

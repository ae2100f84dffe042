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

#ifndef QKNN_DISTRIBUTION_HPP
#define QKNN_DISTRIBUTION_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "qknn/rng.hpp"
#include "qknn/vote.hpp"

namespace qknn {

/// Probability vector over class ids. Produced by both quantum classifier
/// models; entries are nonnegative and sum to 1 up to rounding.
struct ClassDistribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }

  double sum() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

  /// Most probable class, ties to the smallest id.
  int argmax() const { return argmax_smallest(probs); }

  /// One draw by inverse CDF walk over class ids in ascending order.
  int sample(RngStream& rng) const {
    const double u = rng.next_double();
    double acc = 0.0;
    for (std::size_t c = 0; c + 1 < probs.size(); ++c) {
      acc += probs[c];
      if (u < acc) {
        return static_cast<int>(c);
      }
    }
    return static_cast<int>(probs.size()) - 1;
  }
};

}  // namespace qknn

#endif  // QKNN_DISTRIBUTION_HPP

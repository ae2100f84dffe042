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

// Nearest-neighbor classifier driven by the tuple-sorting primitive: training
// patterns are ranked by distance to the query, the rank distribution gives
// each pattern a draw probability skewed toward the nearest, and k draws are
// put to a majority vote.

#ifndef QKNN_MP_QKNN_HPP
#define QKNN_MP_QKNN_HPP

#include <span>
#include <vector>

#include "qknn/dataset.hpp"
#include "qknn/distribution.hpp"
#include "qknn/mp_sort.hpp"
#include "qknn/rng.hpp"

namespace qknn {

enum class TiePolicy {
  kSeededRandom,   // equal distances ordered by seeded random priorities
  kByTrainIndex,   // equal distances ordered by training index
};

/// Order labels for one query: labels[i] in 1..N is the rank label of
/// training pattern i, nearest pattern labeled N, farthest labeled 1.
struct OrderLabeling {
  std::vector<int> labels;

  int size() const { return static_cast<int>(labels.size()); }
};

/// Ranks training patterns by Hamming distance to the query. Distance ties
/// break by the policy; kSeededRandom consumes one rng draw per training
/// pattern (in index order) and requires rng != nullptr.
OrderLabeling order_labels(const LabeledDataset& train, const BinaryPattern& query,
                           TiePolicy policy, RngStream* rng);

struct MPClassifierConfig {
  int tuple_width = 5;   // m
  int iterations = 8;    // p
  int k = 1;             // class draws per query
  TiePolicy tie_policy = TiePolicy::kSeededRandom;
};

/// Class draw distribution: each pattern's weight is the rank distribution
/// value at its label, summed per class. Exact integer counts throughout,
/// one division per class.
ClassDistribution class_distribution(const OrderLabeling& labeling,
                                     std::span<const int> class_ids,
                                     int num_classes, const MPParams& params);

/// k class draws from the distribution, majority vote, tie to the smallest
/// class id.
int run_classifier(const OrderLabeling& labeling, std::span<const int> class_ids,
                   int num_classes, const MPClassifierConfig& config,
                   RngStream& rng);

/// Deterministic limit: argmax of the class distribution.
int classify_argmax(const OrderLabeling& labeling, std::span<const int> class_ids,
                    int num_classes, const MPParams& params);

/// Reference distribution by direct enumeration of all N^m label tuples,
/// weighting each by the tuple-sorting measurement probability of its first
/// component. Refuses instances with more than ten million tuples.
ClassDistribution brute_force_class_distribution(const OrderLabeling& labeling,
                                                 std::span<const int> class_ids,
                                                 int num_classes,
                                                 const MPParams& params);

}  // namespace qknn

#endif  // QKNN_MP_QKNN_HPP

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

#ifndef QKNN_CLASSICAL_KNN_HPP
#define QKNN_CLASSICAL_KNN_HPP

#include <span>
#include <string_view>
#include <vector>

#include "qknn/dataset.hpp"

namespace qknn {

enum class DistanceKind {
  kHammingOnBits,   // bit strings, matches the quantum pipeline's representation
  kEuclideanOnRaw,  // raw numeric attributes
};

/// Number of differing positions between two equal-length bit strings.
/// Throws on length mismatch.
int hamming(std::string_view a, std::string_view b);

struct NeighborRecord {
  int train_index = 0;
  double distance = 0.0;
  int class_id = 0;
};

/// The k nearest entries of a distance array, ascending; equal distances
/// resolve to the smaller training index.
std::vector<NeighborRecord> k_nearest(std::span<const double> distances,
                                      std::span<const int> class_ids, int k);

/// k-NN over bit patterns with Hamming distance. Majority class among the k
/// nearest, smallest-mode tie rule. Requires 1 <= k <= N and matching bit
/// lengths.
int knn_classify(const LabeledDataset& train, const BinaryPattern& query, int k);

/// k-NN over raw numeric rows. Distances are squared Euclidean, which orders
/// neighbors identically to Euclidean while staying exact on decimal input.
int knn_classify(std::span<const std::vector<double>> rows,
                 std::span<const int> class_ids, int num_classes,
                 const std::vector<double>& query, int k);

}  // namespace qknn

#endif  // QKNN_CLASSICAL_KNN_HPP

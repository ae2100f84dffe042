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

#include "qknn/classical_knn.hpp"

#include <algorithm>
#include <stdexcept>

#include "qknn/vote.hpp"

namespace qknn {

int hamming(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming: length mismatch");
  }
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++d;
  }
  return d;
}

std::vector<NeighborRecord> k_nearest(std::span<const double> distances,
                                      std::span<const int> class_ids, int k) {
  if (distances.size() != class_ids.size()) {
    throw std::invalid_argument("k_nearest: size mismatch");
  }
  if (k < 1 || static_cast<std::size_t>(k) > distances.size()) {
    throw std::invalid_argument("k_nearest: k out of range");
  }
  std::vector<NeighborRecord> all(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i) {
    all[i] = NeighborRecord{static_cast<int>(i), distances[i], class_ids[i]};
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const NeighborRecord& x, const NeighborRecord& y) {
                     return x.distance < y.distance;
                   });
  all.resize(static_cast<std::size_t>(k));
  return all;
}

namespace {

int vote_on(const std::vector<NeighborRecord>& neighbors, int num_classes) {
  std::vector<int> votes;
  votes.reserve(neighbors.size());
  for (const auto& n : neighbors) votes.push_back(n.class_id);
  return smallest_mode(votes, num_classes);
}

}  // namespace

int knn_classify(const LabeledDataset& train, const BinaryPattern& query, int k) {
  if (train.patterns.empty()) {
    throw std::invalid_argument("knn_classify: empty training set");
  }
  std::vector<double> dist(train.patterns.size());
  std::vector<int> ids(train.patterns.size());
  for (std::size_t i = 0; i < train.patterns.size(); ++i) {
    dist[i] = hamming(train.patterns[i].bits, query.bits);
    ids[i] = train.patterns[i].class_id;
  }
  return vote_on(k_nearest(dist, ids, k), train.num_classes());
}

int knn_classify(std::span<const std::vector<double>> rows,
                 std::span<const int> class_ids, int num_classes,
                 const std::vector<double>& query, int k) {
  if (rows.empty()) {
    throw std::invalid_argument("knn_classify: empty training set");
  }
  if (rows.size() != class_ids.size()) {
    throw std::invalid_argument("knn_classify: size mismatch");
  }
  std::vector<double> dist(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != query.size()) {
      throw std::invalid_argument("knn_classify: attribute count mismatch");
    }
    double s = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double d = rows[i][j] - query[j];
      s += d * d;
    }
    dist[i] = s;
  }
  return vote_on(k_nearest(dist, class_ids, k), num_classes);
}

}  // namespace qknn

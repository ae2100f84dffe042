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

#include "qknn/mp_qknn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "qknn/classical_knn.hpp"
#include "qknn/vote.hpp"

namespace qknn {

OrderLabeling order_labels(const LabeledDataset& train, const BinaryPattern& query,
                           TiePolicy policy, RngStream* rng) {
  if (train.patterns.empty()) {
    throw std::invalid_argument("order_labels: empty training set");
  }
  if (policy == TiePolicy::kSeededRandom && rng == nullptr) {
    throw std::invalid_argument("order_labels: random tie policy needs an rng");
  }
  const std::size_t n = train.patterns.size();
  std::vector<int> dist(n);
  std::vector<std::uint64_t> priority(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = hamming(train.patterns[i].bits, query.bits);
    priority[i] = (policy == TiePolicy::kSeededRandom)
                      ? rng->next_u64()
                      : static_cast<std::uint64_t>(i);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(dist[a], priority[a], a) < std::tuple(dist[b], priority[b], b);
  });
  OrderLabeling labeling;
  labeling.labels.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    labeling.labels[order[r]] = static_cast<int>(n - r);
  }
  return labeling;
}

namespace {

// Shared validation: labels must be a permutation of 1..N matching the
// parameter array length, class ids in range.
void check_instance(const OrderLabeling& labeling, std::span<const int> class_ids,
                    int num_classes, const MPParams& params) {
  validate(params);
  const int n = labeling.size();
  if (n != params.array_length) {
    throw std::invalid_argument("mp classifier: labeling size differs from array length");
  }
  if (static_cast<std::size_t>(n) != class_ids.size()) {
    throw std::invalid_argument("mp classifier: class id count differs from labeling");
  }
  if (num_classes < 1) {
    throw std::invalid_argument("mp classifier: no classes");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : labeling.labels) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("mp classifier: labels are not a permutation");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  for (int c : class_ids) {
    if (c < 0 || c >= num_classes) {
      throw std::invalid_argument("mp classifier: class id out of range");
    }
  }
}

}  // namespace

ClassDistribution class_distribution(const OrderLabeling& labeling,
                                     std::span<const int> class_ids,
                                     int num_classes, const MPParams& params) {
  check_instance(labeling, class_ids, num_classes, params);
  const MPDerived derived = derive(params);
  std::vector<uint128> marked(static_cast<std::size_t>(num_classes), 0);
  std::vector<uint128> unmarked(static_cast<std::size_t>(num_classes), 0);
  for (std::size_t i = 0; i < class_ids.size(); ++i) {
    const int x = labeling.labels[i];
    const auto c = static_cast<std::size_t>(class_ids[i]);
    marked[c] = checked_add(marked[c],
                            n1(x, params.array_length, params.tuple_width));
    unmarked[c] = checked_add(unmarked[c],
                              n0(x, params.array_length, params.tuple_width));
  }
  const double sin_a = std::sin(derived.alpha);
  const double sin2 = sin_a * sin_a;
  const double cos2 = 1.0 - sin2;
  const double inv_mu = 1.0 / to_double(derived.mu);
  const double inv_nu = 1.0 / to_double(derived.nu);
  std::vector<double> probs(static_cast<std::size_t>(num_classes), 0.0);
  for (std::size_t c = 0; c < probs.size(); ++c) {
    probs[c] = cos2 * to_double(unmarked[c]) * inv_nu +
               sin2 * to_double(marked[c]) * inv_mu;
  }
  return ClassDistribution{std::move(probs)};
}

int run_classifier(const OrderLabeling& labeling, std::span<const int> class_ids,
                   int num_classes, const MPClassifierConfig& config,
                   RngStream& rng) {
  if (config.k < 1) {
    throw std::invalid_argument("run_classifier: k must be positive");
  }
  const MPParams params{labeling.size(), config.tuple_width, config.iterations};
  const ClassDistribution dist =
      class_distribution(labeling, class_ids, num_classes, params);
  std::vector<int> draws(static_cast<std::size_t>(config.k));
  for (auto& d : draws) d = dist.sample(rng);
  return smallest_mode(draws, num_classes);
}

int classify_argmax(const OrderLabeling& labeling, std::span<const int> class_ids,
                    int num_classes, const MPParams& params) {
  return class_distribution(labeling, class_ids, num_classes, params).argmax();
}

ClassDistribution brute_force_class_distribution(const OrderLabeling& labeling,
                                                 std::span<const int> class_ids,
                                                 int num_classes,
                                                 const MPParams& params) {
  check_instance(labeling, class_ids, num_classes, params);
  const auto n = static_cast<std::size_t>(params.array_length);
  const auto m = static_cast<std::size_t>(params.tuple_width);
  const uint128 tuples =
      checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m));
  if (tuples > uint128{10'000'000}) {
    throw std::invalid_argument("brute force: instance too large");
  }
  const MPDerived derived = derive(params);
  const double sin_a = std::sin(derived.alpha);
  const double sin2 = sin_a * sin_a;
  const double cos2 = 1.0 - sin2;
  const double marked_weight = sin2 / to_double(derived.mu);
  const double unmarked_weight = cos2 / to_double(derived.nu);

  std::vector<double> probs(static_cast<std::size_t>(num_classes), 0.0);
  std::vector<std::size_t> odo(m, 0);
  while (true) {
    // Tuples ascending in the element order carry strictly descending labels.
    bool descending = true;
    for (std::size_t j = 1; j < m && descending; ++j) {
      descending = labeling.labels[odo[j - 1]] > labeling.labels[odo[j]];
    }
    probs[static_cast<std::size_t>(class_ids[odo[0]])] +=
        descending ? marked_weight : unmarked_weight;
    std::size_t pos = m;
    while (pos > 0 && ++odo[pos - 1] == n) {
      odo[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return ClassDistribution{std::move(probs)};
}

}  // namespace qknn

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

#include "qknn/schuld.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qknn/classical_knn.hpp"
#include "qknn/vote.hpp"

namespace qknn {

SchuldModel build_model(const LabeledDataset& train, const BinaryPattern& query) {
  if (train.patterns.empty()) {
    throw std::invalid_argument("build_model: empty training set");
  }
  if (query.bits.size() != static_cast<std::size_t>(train.bit_length)) {
    throw std::invalid_argument("build_model: query bit length mismatch");
  }
  SchuldModel model;
  model.n = train.bit_length;
  model.num_classes = train.num_classes();
  model.entries.reserve(train.patterns.size());
  for (const auto& p : train.patterns) {
    model.entries.push_back(SchuldEntry{hamming(p.bits, query.bits), p.class_id});
  }
  return model;
}

double pattern_weight(int d_h, int n) {
  if (n < 1 || d_h < 0 || d_h > n) {
    throw std::invalid_argument("pattern_weight: distance out of range");
  }
  if (d_h == 0) return 1.0;
  if (d_h == n) return 0.0;
  const double c = std::cos(std::numbers::pi * d_h / (2.0 * n));
  return c * c;
}

double p0(const SchuldModel& model) {
  if (model.entries.empty()) {
    throw std::invalid_argument("p0: empty model");
  }
  double sum = 0.0;
  for (const auto& e : model.entries) sum += pattern_weight(e.d_h, model.n);
  return sum / static_cast<double>(model.entries.size());
}

ClassDistribution class_distribution(const SchuldModel& model) {
  if (model.num_classes < 1) {
    throw std::invalid_argument("class_distribution: no classes");
  }
  std::vector<double> sums(static_cast<std::size_t>(model.num_classes), 0.0);
  double total = 0.0;
  for (const auto& e : model.entries) {
    const double w = pattern_weight(e.d_h, model.n);
    sums[static_cast<std::size_t>(e.class_id)] += w;
    total += w;
  }
  if (total == 0.0) {
    throw std::domain_error("class_distribution: zero success probability");
  }
  for (auto& s : sums) s /= total;
  return ClassDistribution{std::move(sums)};
}

SchuldOutcome run_protocol(const SchuldModel& model, int k, int t_budget,
                           RngStream& rng) {
  if (k < 1) throw std::invalid_argument("run_protocol: k must be positive");
  if (t_budget <= k) {
    throw std::invalid_argument("run_protocol: budget must exceed k");
  }
  const double success = p0(model);
  std::vector<int> draws;
  draws.reserve(static_cast<std::size_t>(k));
  // The conditional distribution is undefined at success == 0, but then no
  // run ever succeeds, so it is never sampled.
  ClassDistribution dist;
  if (success > 0.0) dist = class_distribution(model);
  for (int run = 1; run <= t_budget; ++run) {
    if (rng.next_double() < success) {
      draws.push_back(dist.sample(rng));
      if (static_cast<int>(draws.size()) == k) {
        return SchuldOutcome{true, smallest_mode(draws, model.num_classes), run};
      }
    }
  }
  return SchuldOutcome{false, -1, t_budget};
}

int classify_argmax(const SchuldModel& model) {
  const ClassDistribution dist = class_distribution(model);
  return dist.argmax();
}

}  // namespace qknn

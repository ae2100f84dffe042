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

// Interference-based quantum classifier model. A single circuit run either
// succeeds (conditional measurement lands in the accepting branch, probability
// p0) and then yields one class draw, or fails. The protocol repeats runs
// until k class draws are gathered or a run budget T is exhausted.

#ifndef QKNN_SCHULD_HPP
#define QKNN_SCHULD_HPP

#include <vector>

#include "qknn/dataset.hpp"
#include "qknn/distribution.hpp"
#include "qknn/rng.hpp"

namespace qknn {

struct SchuldEntry {
  int d_h = 0;      // Hamming distance from the query
  int class_id = 0;
};

struct SchuldModel {
  int n = 0;            // pattern bit length
  int num_classes = 0;
  std::vector<SchuldEntry> entries;
};

SchuldModel build_model(const LabeledDataset& train, const BinaryPattern& query);

/// Per-pattern interference weight cos^2(pi * d / (2n)). The endpoints are
/// pinned: d == 0 weighs exactly 1 and d == n exactly 0, so a query identical
/// to every pattern succeeds always and a query maximally far from every
/// pattern never does.
double pattern_weight(int d_h, int n);

/// Success probability of one circuit run: the mean pattern weight.
double p0(const SchuldModel& model);

/// Class distribution conditioned on a successful run: per-class weight sums
/// normalized by the total. Throws domain_error when p0 is zero.
ClassDistribution class_distribution(const SchuldModel& model);

struct SchuldOutcome {
  bool classified = false;
  int class_id = -1;
  int runs_used = 0;
};

/// Repeat-until-k protocol: up to T runs, each succeeding with probability p0;
/// a success consumes one class draw. Classification is the smallest-mode
/// majority over the first k draws. Requires T > k. An exhausted budget yields
/// an unclassifiable outcome with runs_used == T.
SchuldOutcome run_protocol(const SchuldModel& model, int k, int t_budget,
                           RngStream& rng);

/// Deterministic limit: argmax of the conditional class distribution,
/// smallest class id on ties.
int classify_argmax(const SchuldModel& model);

}  // namespace qknn

#endif  // QKNN_SCHULD_HPP

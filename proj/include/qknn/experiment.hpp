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

// Leave-one-out benchmark over a labeled dataset for the three classifiers,
// with deterministic per-(algorithm, k, run, fold) seeding, summary
// statistics, and JSON/CSV emission. Also hosts the simulator verification
// sweep that cross-checks circuit output against closed forms.

#ifndef QKNN_EXPERIMENT_HPP
#define QKNN_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qknn/classical_knn.hpp"
#include "qknn/dataset.hpp"
#include "qknn/mp_qknn.hpp"
#include "qknn/qsim.hpp"

namespace qknn {

enum class Algorithm {
  kClassical = 0,
  kSchuld = 1,
  kMP = 2,
};

std::string algorithm_name(Algorithm algorithm);

struct ExperimentConfig {
  std::string dataset_path;
  Algorithm algorithm = Algorithm::kClassical;
  std::vector<int> k_values = {1, 3, 5, 7, 9, 11, 13};
  int runs = 50;                  // repetitions per k for the quantum models
  std::uint64_t master_seed = 0;
  int tuple_width = 5;            // m
  int iterations = 8;             // p
  int t_multiplier = 5;           // run budget T = t_multiplier * k
  DistanceKind distance = DistanceKind::kHammingOnBits;
  TiePolicy tie_policy = TiePolicy::kSeededRandom;
  BinarizationSpec binarization;
};

struct SummaryStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

/// Five-number summary plus mean; quartiles by inclusive linear
/// interpolation at h = (n - 1) q.
SummaryStats summary_stats(const std::vector<double>& values);

struct KResult {
  int k = 0;
  std::vector<double> accuracies;      // one entry per run
  std::vector<int> unclassifiable;     // per run, queries left undecided
  SummaryStats stats;
};

struct RunSummary {
  ExperimentConfig config;
  std::string dataset_digest;
  int pattern_count = 0;
  std::vector<KResult> per_k;
  double argmax_accuracy = 0.0;        // quantum models only
  bool has_argmax = false;
};

/// Digest of the binarized dataset text, "fnv1a64:" + 16 hex digits.
std::string dataset_digest(const LabeledDataset& data);

/// Full leave-one-out benchmark. The classical model is deterministic and
/// runs once per k; quantum models run config.runs times per k, the rng for
/// each (k, run, fold) derived from the master seed.
RunSummary run_benchmark(const ExperimentConfig& config);

std::string to_json(const RunSummary& summary);
std::string to_csv(const RunSummary& summary);

/// Writes text to path, or to stdout when path is empty.
void emit_results(const std::string& text, const std::string& path);

struct VerifyInstance {
  int array_length = 0;
  int tuple_width = 0;
  int iterations = 0;
  double max_abs_deviation = 0.0;  // label distribution, simulator vs closed form
  double ancilla_sim = 0.0;
  double ancilla_closed = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyInstance> instances;
  bool all_pass = true;
};

/// Simulates every (N, m, p) combination with m <= N that fits the qubit
/// ceiling and compares the first-register label distribution and the
/// ancilla probability against the closed forms.
VerifyReport verify_sim(const std::vector<int>& array_lengths,
                        const std::vector<int>& tuple_widths,
                        const std::vector<int>& iteration_counts,
                        int qubit_ceiling = kDefaultQubitCeiling,
                        double tolerance = 1e-9);

}  // namespace qknn

#endif  // QKNN_EXPERIMENT_HPP

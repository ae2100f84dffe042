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

#include "qknn/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qknn/rng.hpp"
#include "qknn/schuld.hpp"

namespace qknn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t seed_id(Algorithm algorithm) {
  return static_cast<std::uint64_t>(algorithm);
}

std::string distance_name(DistanceKind kind) {
  return kind == DistanceKind::kHammingOnBits ? "hamming" : "euclidean";
}

std::string tie_policy_name(TiePolicy policy) {
  return policy == TiePolicy::kSeededRandom ? "random" : "index";
}

std::string width_policy_name(WidthPolicy policy) {
  switch (policy) {
    case WidthPolicy::kPerAttributeMin: return "min";
    case WidthPolicy::kGlobalMax: return "max";
    case WidthPolicy::kExplicit: return "explicit";
  }
  return "min";
}

std::vector<int> fold_class_ids(const LabeledDataset& training) {
  std::vector<int> ids(training.patterns.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = training.patterns[i].class_id;
  }
  return ids;
}

// Number formatting shared by JSON and CSV output: shortest exact
// round-trip form, so identical bits serialize identically.
std::string number_text(double v) { return ordered_json(v).dump(); }

}  // namespace

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kClassical: return "classical";
    case Algorithm::kSchuld: return "schuld";
    case Algorithm::kMP: return "mp";
  }
  throw std::invalid_argument("algorithm_name: unknown algorithm");
}

SummaryStats summary_stats(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("summary_stats: empty input");
  }
  std::vector<double> s = values;
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  const auto quantile = [&](double q) {
    const double h = static_cast<double>(n - 1) * q;
    const auto lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= n) return s[n - 1];
    return s[lo] + frac * (s[lo + 1] - s[lo]);
  };
  SummaryStats stats;
  stats.min = s.front();
  stats.q1 = quantile(0.25);
  stats.median = quantile(0.5);
  stats.q3 = quantile(0.75);
  stats.max = s.back();
  double sum = 0.0;
  for (double v : s) sum += v;
  stats.mean = sum / static_cast<double>(n);
  return stats;
}

std::string dataset_digest(const LabeledDataset& data) {
  const std::string text = export_binarized(data);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

RunSummary run_benchmark(const ExperimentConfig& config) {
  if (config.k_values.empty()) {
    throw std::invalid_argument("run_benchmark: no k values");
  }
  if (config.runs < 1) {
    throw std::invalid_argument("run_benchmark: runs must be positive");
  }
  const RawDataset raw = parse_csv_file(config.dataset_path);
  const LabeledDataset data = binarize(raw, config.binarization);
  const std::vector<LooFold> folds = loo_folds(data);
  const int training_size = static_cast<int>(data.size()) - 1;
  for (int k : config.k_values) {
    if (k < 1 || k > training_size) {
      throw std::invalid_argument("run_benchmark: k out of range for dataset");
    }
  }
  if (config.algorithm == Algorithm::kSchuld && config.t_multiplier < 2) {
    throw std::invalid_argument("run_benchmark: run budget multiplier too small");
  }

  RunSummary summary;
  summary.config = config;
  summary.dataset_digest = dataset_digest(data);
  summary.pattern_count = static_cast<int>(data.size());

  const std::uint64_t algo = seed_id(config.algorithm);
  const int num_classes = data.num_classes();
  const double fold_count = static_cast<double>(folds.size());

  // Raw rows for the Euclidean classical baseline; order matches folds.
  std::vector<std::vector<double>> rows;
  std::vector<int> row_ids;
  if (config.algorithm == Algorithm::kClassical &&
      config.distance == DistanceKind::kEuclideanOnRaw) {
    rows.reserve(raw.records.size());
    for (const auto& r : raw.records) rows.push_back(r.attributes);
    row_ids = fold_class_ids(data);  // full dataset in pattern order
  }

  for (int k : config.k_values) {
    KResult result;
    result.k = k;
    if (config.algorithm == Algorithm::kClassical) {
      int correct = 0;
      for (std::size_t f = 0; f < folds.size(); ++f) {
        const LooFold& fold = folds[f];
        int predicted;
        if (config.distance == DistanceKind::kHammingOnBits) {
          predicted = knn_classify(fold.training, fold.query, k);
        } else {
          std::vector<std::vector<double>> train_rows;
          std::vector<int> train_ids;
          train_rows.reserve(rows.size() - 1);
          train_ids.reserve(rows.size() - 1);
          for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == fold.query_index) continue;
            train_rows.push_back(rows[i]);
            train_ids.push_back(row_ids[i]);
          }
          predicted = knn_classify(train_rows, train_ids, num_classes,
                                   rows[fold.query_index], k);
        }
        if (predicted == fold.query.class_id) ++correct;
      }
      result.accuracies.push_back(static_cast<double>(correct) / fold_count);
      result.unclassifiable.push_back(0);
    } else {
      for (int run = 0; run < config.runs; ++run) {
        int correct = 0;
        int undecided = 0;
        for (std::size_t f = 0; f < folds.size(); ++f) {
          const LooFold& fold = folds[f];
          RngStream rng(combine_seed(config.master_seed,
                                     {algo, static_cast<std::uint64_t>(k),
                                      static_cast<std::uint64_t>(run),
                                      static_cast<std::uint64_t>(f)}));
          if (config.algorithm == Algorithm::kSchuld) {
            const SchuldModel model = build_model(fold.training, fold.query);
            const SchuldOutcome outcome =
                run_protocol(model, k, config.t_multiplier * k, rng);
            if (!outcome.classified) {
              ++undecided;
            } else if (outcome.class_id == fold.query.class_id) {
              ++correct;
            }
          } else {
            const OrderLabeling labeling =
                order_labels(fold.training, fold.query, config.tie_policy, &rng);
            const std::vector<int> ids = fold_class_ids(fold.training);
            const MPClassifierConfig mp_config{config.tuple_width,
                                               config.iterations, k,
                                               config.tie_policy};
            const int predicted =
                run_classifier(labeling, ids, num_classes, mp_config, rng);
            if (predicted == fold.query.class_id) ++correct;
          }
        }
        result.accuracies.push_back(static_cast<double>(correct) / fold_count);
        result.unclassifiable.push_back(undecided);
      }
    }
    result.stats = summary_stats(result.accuracies);
    summary.per_k.push_back(std::move(result));
  }

  if (config.algorithm != Algorithm::kClassical) {
    int correct = 0;
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const LooFold& fold = folds[f];
      if (config.algorithm == Algorithm::kSchuld) {
        const SchuldModel model = build_model(fold.training, fold.query);
        if (p0(model) > 0.0 &&
            classify_argmax(model) == fold.query.class_id) {
          ++correct;
        }
      } else {
        RngStream rng(combine_seed(config.master_seed, {algo, 0, 0,
                                   static_cast<std::uint64_t>(f)}));
        const OrderLabeling labeling =
            order_labels(fold.training, fold.query, config.tie_policy, &rng);
        const std::vector<int> ids = fold_class_ids(fold.training);
        const MPParams params{static_cast<int>(fold.training.size()),
                              config.tuple_width, config.iterations};
        if (classify_argmax(labeling, ids, num_classes, params) ==
            fold.query.class_id) {
          ++correct;
        }
      }
    }
    summary.argmax_accuracy = static_cast<double>(correct) / fold_count;
    summary.has_argmax = true;
  }
  return summary;
}

std::string to_json(const RunSummary& summary) {
  ordered_json j;
  j["algorithm"] = algorithm_name(summary.config.algorithm);
  j["dataset_path"] = summary.config.dataset_path;
  j["dataset_digest"] = summary.dataset_digest;
  j["pattern_count"] = summary.pattern_count;
  ordered_json params;
  params["master_seed"] = summary.config.master_seed;
  params["runs"] = summary.config.runs;
  params["k_values"] = summary.config.k_values;
  params["m"] = summary.config.tuple_width;
  params["p"] = summary.config.iterations;
  params["t_multiplier"] = summary.config.t_multiplier;
  params["distance"] = distance_name(summary.config.distance);
  params["tie_policy"] = tie_policy_name(summary.config.tie_policy);
  params["scale_factor"] = summary.config.binarization.scale_factor;
  params["width_policy"] = width_policy_name(summary.config.binarization.width_policy);
  if (summary.config.binarization.width_policy == WidthPolicy::kExplicit) {
    params["widths"] = summary.config.binarization.widths;
  }
  j["params"] = params;
  if (summary.has_argmax) {
    j["argmax_accuracy"] = summary.argmax_accuracy;
  }
  ordered_json per_k = ordered_json::array();
  for (const auto& r : summary.per_k) {
    ordered_json jk;
    jk["k"] = r.k;
    jk["accuracies"] = r.accuracies;
    ordered_json stats;
    stats["min"] = r.stats.min;
    stats["q1"] = r.stats.q1;
    stats["median"] = r.stats.median;
    stats["q3"] = r.stats.q3;
    stats["max"] = r.stats.max;
    stats["mean"] = r.stats.mean;
    jk["stats"] = stats;
    jk["unclassifiable"] = r.unclassifiable;
    per_k.push_back(jk);
  }
  j["per_k"] = per_k;
  return j.dump(2) + "\n";
}

std::string to_csv(const RunSummary& summary) {
  std::ostringstream out;
  out << "algorithm,k,run,accuracy,unclassifiable\n";
  const std::string name = algorithm_name(summary.config.algorithm);
  for (const auto& r : summary.per_k) {
    for (std::size_t run = 0; run < r.accuracies.size(); ++run) {
      out << name << ',' << r.k << ',' << run << ','
          << number_text(r.accuracies[run]) << ',' << r.unclassifiable[run]
          << '\n';
    }
  }
  return out.str();
}

void emit_results(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_results: cannot open " + path);
  }
  out << text;
  if (!out) {
    throw std::runtime_error("emit_results: write failed for " + path);
  }
}

VerifyReport verify_sim(const std::vector<int>& array_lengths,
                        const std::vector<int>& tuple_widths,
                        const std::vector<int>& iteration_counts,
                        int qubit_ceiling, double tolerance) {
  if (array_lengths.empty() || tuple_widths.empty() || iteration_counts.empty()) {
    throw std::invalid_argument("verify_sim: empty grid");
  }
  VerifyReport report;
  for (int array_length : array_lengths) {
    for (int tuple_width : tuple_widths) {
      if (tuple_width < 2 || tuple_width > array_length) continue;
      std::vector<std::uint32_t> elements(
          static_cast<std::size_t>(array_length));
      for (int v = 0; v < array_length; ++v) {
        elements[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(v);
      }
      const SortInput input = make_sort_input(std::move(elements));
      if (tuple_width * input.bit_width + 1 > qubit_ceiling) continue;
      for (int iterations : iteration_counts) {
        const MPParams params{array_length, tuple_width, iterations};
        StateVector state = prepare_uniform(input, tuple_width, qubit_ceiling);
        apply_order_oracle(state, input);
        amplitude_amplify(state, iterations, input);
        const RankDistribution sim =
            first_register_label_distribution(state, input);
        const RankDistribution closed = exact_rank_distribution(params);
        double max_dev = 0.0;
        for (int x = 1; x <= array_length; ++x) {
          max_dev = std::max(max_dev,
                             std::abs(sim.label_prob(x) - closed.label_prob(x)));
        }
        VerifyInstance instance;
        instance.array_length = array_length;
        instance.tuple_width = tuple_width;
        instance.iterations = iterations;
        instance.max_abs_deviation = max_dev;
        instance.ancilla_sim = ancilla_one_probability(state);
        const double sin_a = std::sin(derive(params).alpha);
        instance.ancilla_closed = sin_a * sin_a;
        instance.pass =
            max_dev <= tolerance &&
            std::abs(instance.ancilla_sim - instance.ancilla_closed) <= tolerance;
        report.all_pass = report.all_pass && instance.pass;
        report.instances.push_back(instance);
      }
    }
  }
  return report;
}

}  // namespace qknn

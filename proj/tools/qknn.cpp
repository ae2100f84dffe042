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

// Command-line front end: dataset encoding, classifier benchmarks, simulator
// verification, and closed-form parameter tables.
//
// Exit codes: 0 success, 1 configuration error, 2 verification failure,
// 3 I/O error.

#include <charconv>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qknn/experiment.hpp"

namespace {

qknn::BinarizationSpec make_binarization(int scale, const std::string& widths) {
  qknn::BinarizationSpec spec;
  spec.scale_factor = scale;
  if (widths == "min") {
    spec.width_policy = qknn::WidthPolicy::kPerAttributeMin;
  } else if (widths == "max") {
    spec.width_policy = qknn::WidthPolicy::kGlobalMax;
  } else {
    spec.width_policy = qknn::WidthPolicy::kExplicit;
    std::size_t pos = 0;
    while (pos <= widths.size()) {
      const std::size_t comma = std::min(widths.find(',', pos), widths.size());
      unsigned value = 0;
      const auto [ptr, ec] = std::from_chars(widths.data() + pos,
                                             widths.data() + comma, value);
      if (ec != std::errc{} || ptr != widths.data() + comma) {
        throw std::invalid_argument("--widths must be min, max, or a comma list");
      }
      spec.widths.push_back(value);
      pos = comma + 1;
    }
  }
  return spec;
}

qknn::Algorithm parse_algorithm(const std::string& name) {
  if (name == "classical") return qknn::Algorithm::kClassical;
  if (name == "schuld") return qknn::Algorithm::kSchuld;
  if (name == "mp") return qknn::Algorithm::kMP;
  throw std::invalid_argument("--algo must be classical, schuld, or mp");
}

int run_encode(const std::string& dataset, int scale, const std::string& widths,
               const std::string& out) {
  const qknn::RawDataset raw = qknn::parse_csv_file(dataset);
  const qknn::LabeledDataset data =
      qknn::binarize(raw, make_binarization(scale, widths));
  qknn::emit_results(qknn::export_binarized(data), out);
  return 0;
}

int run_bench(const qknn::ExperimentConfig& config, const std::string& format,
              const std::string& out) {
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("--format must be json or csv");
  }
  const qknn::RunSummary summary = qknn::run_benchmark(config);
  qknn::emit_results(format == "json" ? qknn::to_json(summary)
                                      : qknn::to_csv(summary),
                     out);
  return 0;
}

int run_verify(const std::vector<int>& n_values, const std::vector<int>& m_values,
               const std::vector<int>& p_values, int ceiling, double tol,
               const std::string& out) {
  const qknn::VerifyReport report =
      qknn::verify_sim(n_values, m_values, p_values, ceiling, tol);
  std::ostringstream text;
  text << "N,m,p,max_abs_dev,ancilla_sim,ancilla_closed,status\n";
  text << std::scientific << std::setprecision(6);
  for (const auto& inst : report.instances) {
    text << inst.array_length << ',' << inst.tuple_width << ','
         << inst.iterations << ',' << inst.max_abs_deviation << ','
         << inst.ancilla_sim << ',' << inst.ancilla_closed << ','
         << (inst.pass ? "pass" : "FAIL") << '\n';
  }
  text << (report.all_pass ? "result: all instances pass\n"
                           : "result: verification FAILED\n");
  qknn::emit_results(text.str(), out);
  return report.all_pass ? 0 : 2;
}

int run_tune(int array_length, const std::vector<int>& m_values, int p_max,
             const std::string& out) {
  std::ostringstream text;
  text << "m,p,p_least,p_least_approx,p_optimal\n";
  text << std::setprecision(12);
  for (int m : m_values) {
    const int best = qknn::p_optimal(m);
    for (int p = 0; p <= p_max; ++p) {
      text << m << ',' << p << ','
           << qknn::p_least(qknn::MPParams{array_length, m, p}) << ','
           << qknn::p_least_approx(array_length, m, p) << ','
           << (p == best ? 1 : 0) << '\n';
    }
  }
  qknn::emit_results(text.str(), out);
  return 0;
}

int run_dist(int array_length, int tuple_width, int iterations,
             const std::string& out) {
  std::ostringstream text;
  text << std::setprecision(12);
  const qknn::RankDistribution ideal =
      qknn::ideal_rank_distribution(array_length, tuple_width);
  if (iterations < 0) {
    text << "x,ideal\n";
    for (int x = 1; x <= array_length; ++x) {
      text << x << ',' << ideal.label_prob(x) << '\n';
    }
  } else {
    const qknn::RankDistribution exact = qknn::exact_rank_distribution(
        qknn::MPParams{array_length, tuple_width, iterations});
    text << "x,ideal,exact\n";
    for (int x = 1; x <= array_length; ++x) {
      text << x << ',' << ideal.label_prob(x) << ',' << exact.label_prob(x)
           << '\n';
    }
  }
  qknn::emit_results(text.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-order k-nearest-neighbor toolkit"};
  app.require_subcommand(1);

  std::string dataset;
  std::string out;
  std::string widths = "min";
  std::string format = "json";
  std::string algo = "classical";
  std::string distance = "hamming";
  std::string ties = "random";
  int scale = 10;
  std::vector<int> k_values = {1, 3, 5, 7, 9, 11, 13};
  int runs = 50;
  std::uint64_t seed = 0;
  int m = 5;
  int p = 8;
  int t_mult = 5;
  std::vector<int> n_grid = {3, 4, 6, 8};
  std::vector<int> m_grid = {2, 3};
  std::vector<int> p_grid = {0, 1, 2, 3};
  int ceiling = qknn::kDefaultQubitCeiling;
  double tol = 1e-9;
  int tune_n = 150;
  std::vector<int> tune_m = {2, 3, 4, 5};
  int tune_p_max = 12;
  int dist_n = 0;
  int dist_m = 2;
  int dist_p = -1;

  CLI::App* encode = app.add_subcommand("encode", "Binarize a CSV dataset");
  encode->add_option("--dataset", dataset, "CSV file with numeric attributes and a class column")->required();
  encode->add_option("--scale", scale, "Decimal scale factor before integer encoding");
  encode->add_option("--widths", widths, "Bit widths: min, max, or a comma list");
  encode->add_option("--out", out, "Output path (stdout when omitted)");

  CLI::App* bench = app.add_subcommand("bench", "Leave-one-out classifier benchmark");
  bench->add_option("--dataset", dataset, "CSV file")->required();
  bench->add_option("--algo", algo, "classical, schuld, or mp");
  bench->add_option("--k", k_values, "Neighbor/draw counts")->delimiter(',');
  bench->add_option("--runs", runs, "Repetitions per k for the quantum models");
  bench->add_option("--seed", seed, "Master seed");
  bench->add_option("--m", m, "Tuple width");
  bench->add_option("--p", p, "Amplification rounds");
  bench->add_option("--t-mult", t_mult, "Run budget multiplier (budget = t-mult * k)");
  bench->add_option("--distance", distance, "Classical distance: hamming or euclidean");
  bench->add_option("--ties", ties, "Distance tie policy: random or index");
  bench->add_option("--scale", scale, "Decimal scale factor");
  bench->add_option("--widths", widths, "Bit widths: min, max, or a comma list");
  bench->add_option("--format", format, "json or csv");
  bench->add_option("--out", out, "Output path (stdout when omitted)");

  CLI::App* verify = app.add_subcommand("verify-sim", "Cross-check the simulator against closed forms");
  verify->add_option("--n", n_grid, "Array lengths")->delimiter(',');
  verify->add_option("--m", m_grid, "Tuple widths")->delimiter(',');
  verify->add_option("--p", p_grid, "Amplification rounds")->delimiter(',');
  verify->add_option("--ceiling", ceiling, "Qubit ceiling");
  verify->add_option("--tol", tol, "Tolerance");
  verify->add_option("--out", out, "Output path (stdout when omitted)");

  CLI::App* tune = app.add_subcommand("mp-tune", "Least-element probability versus amplification rounds");
  tune->add_option("--n", tune_n, "Array length");
  tune->add_option("--m", tune_m, "Tuple widths")->delimiter(',');
  tune->add_option("--p-max", tune_p_max, "Largest round count tabulated");
  tune->add_option("--out", out, "Output path (stdout when omitted)");

  CLI::App* dist = app.add_subcommand("mp-dist", "Rank label distribution");
  dist->add_option("--n", dist_n, "Array length")->required();
  dist->add_option("--m", dist_m, "Tuple width");
  dist->add_option("--p", dist_p, "Amplification rounds (ideal only when omitted)");
  dist->add_option("--out", out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (encode->parsed()) {
      return run_encode(dataset, scale, widths, out);
    }
    if (bench->parsed()) {
      qknn::ExperimentConfig config;
      config.dataset_path = dataset;
      config.algorithm = parse_algorithm(algo);
      config.k_values = k_values;
      config.runs = runs;
      config.master_seed = seed;
      config.tuple_width = m;
      config.iterations = p;
      config.t_multiplier = t_mult;
      if (distance == "hamming") {
        config.distance = qknn::DistanceKind::kHammingOnBits;
      } else if (distance == "euclidean") {
        config.distance = qknn::DistanceKind::kEuclideanOnRaw;
      } else {
        throw std::invalid_argument("--distance must be hamming or euclidean");
      }
      if (ties == "random") {
        config.tie_policy = qknn::TiePolicy::kSeededRandom;
      } else if (ties == "index") {
        config.tie_policy = qknn::TiePolicy::kByTrainIndex;
      } else {
        throw std::invalid_argument("--ties must be random or index");
      }
      config.binarization = make_binarization(scale, widths);
      return run_bench(config, format, out);
    }
    if (verify->parsed()) {
      return run_verify(n_grid, m_grid, p_grid, ceiling, tol, out);
    }
    if (tune->parsed()) {
      return run_tune(tune_n, tune_m, tune_p_max, out);
    }
    if (dist->parsed()) {
      return run_dist(dist_n, dist_m, dist_p, out);
    }
    std::cerr << "no subcommand selected\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

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

#include "qknn/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qknn {

namespace {

// Layout recovered from a state built over this input: the ancilla plus m
// equal registers of input.bit_width qubits.
RegisterLayout layout_for(const StateVector& state, const SortInput& input) {
  const int n = input.bit_width;
  if (n < 1 || (state.qubit_count - 1) % n != 0) {
    throw std::invalid_argument("qsim: state does not match input bit width");
  }
  const int m = (state.qubit_count - 1) / n;
  return RegisterLayout{m, n};
}

void check_state(const StateVector& state) {
  if (state.qubit_count < 1 ||
      state.amplitudes.size() != (std::size_t{1} << state.qubit_count)) {
    throw std::invalid_argument("qsim: malformed state vector");
  }
}

}  // namespace

bool element_less(std::uint32_t a, std::uint32_t b) { return a < b; }

SortInput make_sort_input(std::vector<std::uint32_t> elements) {
  std::uint32_t max_value = 0;
  for (auto v : elements) max_value = std::max(max_value, v);
  int width = 1;
  while ((std::uint64_t{1} << width) <= max_value) ++width;
  SortInput input;
  input.elements = std::move(elements);
  input.bit_width = width;
  validate(input);
  return input;
}

void validate(const SortInput& input) {
  if (input.elements.size() < 2) {
    throw std::invalid_argument("sort input: need at least two elements");
  }
  if (input.bit_width < 1 || input.bit_width > 31) {
    throw std::invalid_argument("sort input: bit width out of range");
  }
  if (!input.less) {
    throw std::invalid_argument("sort input: missing order");
  }
  const std::uint64_t limit = std::uint64_t{1} << input.bit_width;
  for (auto v : input.elements) {
    if (v >= limit) {
      throw std::invalid_argument("sort input: element exceeds bit width");
    }
  }
  // Distinctness under the order: no pair may compare equivalent.
  for (std::size_t i = 0; i < input.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < input.elements.size(); ++j) {
      const auto a = input.elements[i];
      const auto b = input.elements[j];
      if (!input.less(a, b) && !input.less(b, a)) {
        throw std::invalid_argument("sort input: elements not distinct under order");
      }
    }
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

StateVector prepare_uniform(const SortInput& input, int m, int qubit_ceiling) {
  validate(input);
  if (m < 2) {
    throw std::invalid_argument("prepare_uniform: tuple width must be at least 2");
  }
  const RegisterLayout layout{m, input.bit_width};
  const int q = layout.qubit_count();
  if (q > qubit_ceiling) {
    throw std::invalid_argument("prepare_uniform: qubit ceiling exceeded");
  }
  const std::size_t n_elems = input.elements.size();
  const uint128 tuples = checked_pow(static_cast<std::uint64_t>(n_elems),
                                     static_cast<unsigned>(m));
  const double amp = 1.0 / std::sqrt(to_double(tuples));

  StateVector state;
  state.qubit_count = q;
  state.amplitudes.assign(std::size_t{1} << q, {0.0, 0.0});

  std::vector<std::size_t> odo(static_cast<std::size_t>(m), 0);
  while (true) {
    std::uint64_t idx = 0;
    for (int j = 0; j < m; ++j) {
      idx |= std::uint64_t{input.elements[odo[static_cast<std::size_t>(j)]]}
             << layout.register_shift(j);
    }
    state.amplitudes[idx] = {amp, 0.0};
    int pos = m - 1;
    while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == n_elems) {
      odo[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return state;
}

void apply_order_oracle(StateVector& state, const SortInput& input) {
  check_state(state);
  const RegisterLayout layout = layout_for(state, input);
  const int m = layout.register_count;
  const std::uint64_t mask = (std::uint64_t{1} << layout.bits_per_register) - 1;
  const std::size_t dim = state.amplitudes.size();
  for (std::size_t idx = 0; idx < dim; idx += 2) {
    bool increasing = true;
    std::uint32_t prev = 0;
    for (int j = 0; j < m && increasing; ++j) {
      const auto v = static_cast<std::uint32_t>(
          (idx >> layout.register_shift(j)) & mask);
      if (j > 0 && !input.less(prev, v)) increasing = false;
      prev = v;
    }
    if (increasing) std::swap(state.amplitudes[idx], state.amplitudes[idx + 1]);
  }
}

void amplitude_amplify(StateVector& state, int p, const SortInput& input) {
  check_state(state);
  layout_for(state, input);  // consistency check only
  if (p < 0) throw std::invalid_argument("amplitude_amplify: negative rounds");
  const std::vector<std::complex<double>> axis = state.amplitudes;
  const std::size_t dim = state.amplitudes.size();
  for (int iter = 0; iter < p; ++iter) {
    for (std::size_t idx = 1; idx < dim; idx += 2) {
      state.amplitudes[idx] = -state.amplitudes[idx];
    }
    std::complex<double> overlap{0.0, 0.0};
    for (std::size_t idx = 0; idx < dim; ++idx) {
      overlap += std::conj(axis[idx]) * state.amplitudes[idx];
    }
    for (std::size_t idx = 0; idx < dim; ++idx) {
      state.amplitudes[idx] = 2.0 * overlap * axis[idx] - state.amplitudes[idx];
    }
  }
}

std::vector<double> measure_register(const StateVector& state,
                                     const RegisterLayout& layout, int j) {
  check_state(state);
  if (layout.qubit_count() != state.qubit_count) {
    throw std::invalid_argument("measure_register: layout mismatch");
  }
  if (j < 0 || j >= layout.register_count) {
    throw std::invalid_argument("measure_register: register index out of range");
  }
  const int shift = layout.register_shift(j);
  const std::uint64_t mask = (std::uint64_t{1} << layout.bits_per_register) - 1;
  std::vector<double> marginal(std::size_t{1} << layout.bits_per_register, 0.0);
  for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    marginal[(idx >> shift) & mask] += std::norm(state.amplitudes[idx]);
  }
  return marginal;
}

std::uint32_t sample_register(const StateVector& state,
                              const RegisterLayout& layout, int j,
                              RngStream& rng) {
  const std::vector<double> marginal = measure_register(state, layout, j);
  const double u = rng.next_double();
  double acc = 0.0;
  for (std::size_t v = 0; v < marginal.size(); ++v) {
    acc += marginal[v];
    if (u < acc) return static_cast<std::uint32_t>(v);
  }
  return static_cast<std::uint32_t>(marginal.size() - 1);
}

double ancilla_one_probability(const StateVector& state) {
  check_state(state);
  double s = 0.0;
  for (std::size_t idx = 1; idx < state.amplitudes.size(); idx += 2) {
    s += std::norm(state.amplitudes[idx]);
  }
  return s;
}

RankDistribution first_register_label_distribution(const StateVector& state,
                                                   const SortInput& input) {
  validate(input);
  const RegisterLayout layout = layout_for(state, input);
  const std::vector<double> marginal = measure_register(state, layout, 0);
  std::vector<std::uint32_t> ascending = input.elements;
  std::sort(ascending.begin(), ascending.end(), input.less);
  const int n_elems = static_cast<int>(ascending.size());
  std::vector<double> probs(static_cast<std::size_t>(n_elems), 0.0);
  for (int r = 1; r <= n_elems; ++r) {
    const std::uint32_t value = ascending[static_cast<std::size_t>(r - 1)];
    const int label = n_elems - r + 1;
    probs[static_cast<std::size_t>(label - 1)] =
        marginal[static_cast<std::size_t>(value)];
  }
  return RankDistribution{std::move(probs)};
}

}  // namespace qknn

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

// Dense state-vector simulation of the tuple-sorting circuit: m value
// registers of n qubits each plus one flag ancilla. The uniform tuple
// superposition is marked by an order oracle and amplified; measuring the
// first register then favors the array minimum.

#ifndef QKNN_QSIM_HPP
#define QKNN_QSIM_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qknn/mp_sort.hpp"
#include "qknn/rng.hpp"

namespace qknn {

inline constexpr int kDefaultQubitCeiling = 24;

/// Qubit layout. The ancilla is bit 0; register j (0-based, j == 0 first)
/// sits above it, first register most significant.
struct RegisterLayout {
  int register_count = 0;    // tuple width m
  int bits_per_register = 0; // value width n

  int qubit_count() const { return register_count * bits_per_register + 1; }
  int register_shift(int j) const {
    return 1 + (register_count - 1 - j) * bits_per_register;
  }
};

/// Default value order: unsigned comparison.
bool element_less(std::uint32_t a, std::uint32_t b);

struct SortInput {
  std::vector<std::uint32_t> elements;
  int bit_width = 0;
  std::function<bool(std::uint32_t, std::uint32_t)> less = element_less;
};

/// SortInput with the minimal bit width covering the elements.
SortInput make_sort_input(std::vector<std::uint32_t> elements);

/// Requires at least two elements, each fitting bit_width, all distinct
/// under the order.
void validate(const SortInput& input);

struct StateVector {
  std::vector<std::complex<double>> amplitudes;
  int qubit_count = 0;

  double norm() const;
};

/// Uniform superposition over all N^m element tuples, ancilla 0. Throws when
/// the circuit would exceed qubit_ceiling qubits.
StateVector prepare_uniform(const SortInput& input, int m,
                            int qubit_ceiling = kDefaultQubitCeiling);

/// Flips the ancilla on basis states whose tuple is strictly increasing under
/// the input order. An involution.
void apply_order_oracle(StateVector& state, const SortInput& input);

/// p rounds of amplitude amplification of the ancilla-1 branch, reflecting
/// about the state as passed in. Leaves the ancilla-1 overlap at
/// sin((2p+1) * theta) when called right after the oracle.
void amplitude_amplify(StateVector& state, int p, const SortInput& input);

/// Exact measurement marginal of register j: 2^n value probabilities.
std::vector<double> measure_register(const StateVector& state,
                                     const RegisterLayout& layout, int j);

/// One measurement draw from register j's marginal.
std::uint32_t sample_register(const StateVector& state,
                              const RegisterLayout& layout, int j,
                              RngStream& rng);

double ancilla_one_probability(const StateVector& state);

/// First-register marginal re-indexed by order label: rank under the input
/// order, largest element labeled 1, least labeled N. probs[x-1] holds
/// label x.
RankDistribution first_register_label_distribution(const StateVector& state,
                                                   const SortInput& input);

}  // namespace qknn

#endif  // QKNN_QSIM_HPP

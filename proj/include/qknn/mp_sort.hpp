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

#ifndef QKNN_MP_SORT_HPP
#define QKNN_MP_SORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qknn {

// Exact integer arithmetic for the combinatorial quantities. N^m and C(N,m)
// must never lose precision, so everything is carried in 128 bits with
// checked operations; ratios convert to double only at the final division.
using uint128 = unsigned __int128;

uint128 checked_add(uint128 a, uint128 b);
uint128 checked_mul(uint128 a, uint128 b);
uint128 checked_pow(std::uint64_t base, unsigned exp);

/// C(n, k) in exact integer arithmetic; throws std::overflow_error if an
/// intermediate product exceeds 128 bits.
uint128 binomial_exact(unsigned n, unsigned k);

double to_double(uint128 v);
std::string to_decimal_string(uint128 v);

/// Configuration of the amplitude sorter: array length N, tuple width m
/// (quantum memory knob) and amplification iteration count p (circuit depth
/// knob).
struct MPParams {
  int array_length = 0;  // N
  int tuple_width = 0;   // m, in [2, N]
  int iterations = 0;    // p, >= 0
};

/// Throws std::invalid_argument unless N >= 2, 2 <= m <= N, p >= 0.
void validate(const MPParams& params);

/// Quantities derived from (N, m, p):
///   mu    = C(N, m), the number of strictly increasing m-tuples,
///   nu    = N^m - mu,
///   theta = arcsin(sqrt(mu / N^m)),
///   alpha = (2p + 1) * theta, the rotation angle after p iterations.
struct MPDerived {
  uint128 mu = 0;
  uint128 nu = 0;
  uint128 n_pow_m = 0;
  double theta = 0.0;
  double alpha = 0.0;
};

MPDerived derive(const MPParams& params);

/// Probability vector over order labels x in {1..N}. Label x = N is the
/// least element under the order, x = 1 the largest; the sorter concentrates
/// amplitude on large x.
struct RankDistribution {
  std::vector<double> probs;  // probs[x - 1] holds P(x)

  double label_prob(int x) const { return probs.at(static_cast<std::size_t>(x - 1)); }
  int size() const { return static_cast<int>(probs.size()); }
};

/// Measurement distribution of the first register in the fully rotated case
/// sin((2p+1)theta) = 1:
///   P(x) = C(x-1, m-1) / C(N, m)  for m <= x <= N,  0 otherwise.
RankDistribution ideal_rank_distribution(int array_length, int tuple_width);

/// Number of m-tuples whose first component is the element with order label
/// x, split by the oracle bit: n1 counts strictly increasing tuples
/// (C(x-1, m-1) for x >= m, else 0) and n0 = N^(m-1) - n1 the rest.
uint128 n1(int x, int array_length, int tuple_width);
uint128 n0(int x, int array_length, int tuple_width);

/// Full first-register distribution after p iterations, both branches:
///   P(x) = cos^2(alpha) * n0(x)/nu + sin^2(alpha) * n1(x)/mu.
RankDistribution exact_rank_distribution(const MPParams& params);

/// Probability of measuring the least element (label N):
///   (m/N) * sin^2[(2p+1) * arcsin(sqrt(C(N,m)/N^m))].
double p_least(const MPParams& params);

/// Large-N approximation (m/N) * sin^2[(2p+1)/sqrt(m!)].
double p_least_approx(int array_length, int tuple_width, int iterations);

/// Nearest nonnegative integer to (pi/4) * sqrt(m!) - 1/2, the iteration
/// count that first drives sin((2p+1)theta) near 1 when N >> m.
int p_optimal(int tuple_width);

}  // namespace qknn

#endif  // QKNN_MP_SORT_HPP

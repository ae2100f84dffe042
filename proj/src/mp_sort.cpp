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

#include "qknn/mp_sort.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qknn {

uint128 checked_add(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit integer addition overflow");
  }
  return r;
}

uint128 checked_mul(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit integer multiplication overflow");
  }
  return r;
}

uint128 checked_pow(std::uint64_t base, unsigned exp) {
  uint128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

uint128 binomial_exact(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  // r stays integral at every step: after multiplying by (n-k+i) the product
  // of i consecutive ratios is C(n-k+i, i).
  uint128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

double to_double(uint128 v) { return static_cast<double>(v); }

std::string to_decimal_string(uint128 v) {
  if (v == 0) {
    return "0";
  }
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

void validate(const MPParams& params) {
  if (params.array_length < 2) {
    throw std::invalid_argument("MPParams: array length N must be at least 2");
  }
  if (params.tuple_width < 2 || params.tuple_width > params.array_length) {
    throw std::invalid_argument("MPParams: tuple width m must lie in [2, N]");
  }
  if (params.iterations < 0) {
    throw std::invalid_argument("MPParams: iteration count p must be nonnegative");
  }
}

MPDerived derive(const MPParams& params) {
  validate(params);
  const unsigned n = static_cast<unsigned>(params.array_length);
  const unsigned m = static_cast<unsigned>(params.tuple_width);
  MPDerived d;
  d.mu = binomial_exact(n, m);
  d.n_pow_m = checked_pow(n, m);
  d.nu = d.n_pow_m - d.mu;
  d.theta = std::asin(std::sqrt(to_double(d.mu) / to_double(d.n_pow_m)));
  d.alpha = (2.0 * params.iterations + 1.0) * d.theta;
  return d;
}

RankDistribution ideal_rank_distribution(int array_length, int tuple_width) {
  validate({array_length, tuple_width, 0});
  const int n = array_length;
  const int m = tuple_width;
  const uint128 mu = binomial_exact(static_cast<unsigned>(n), static_cast<unsigned>(m));
  RankDistribution dist;
  dist.probs.assign(static_cast<std::size_t>(n), 0.0);
  // b runs through C(x-1, m-1) for x = m..N.
  uint128 b = 1;
  for (int x = m; x <= n; ++x) {
    dist.probs[static_cast<std::size_t>(x - 1)] = to_double(b) / to_double(mu);
    if (x < n) {
      // C(x, m-1) = C(x-1, m-1) * x / (x - m + 1), exact division.
      b = checked_mul(b, static_cast<std::uint64_t>(x)) /
          static_cast<std::uint64_t>(x - m + 1);
    }
  }
  return dist;
}

uint128 n1(int x, int array_length, int tuple_width) {
  validate({array_length, tuple_width, 0});
  if (x < 1 || x > array_length) {
    throw std::invalid_argument("n1: order label out of range");
  }
  if (x < tuple_width) {
    return 0;
  }
  return binomial_exact(static_cast<unsigned>(x - 1), static_cast<unsigned>(tuple_width - 1));
}

uint128 n0(int x, int array_length, int tuple_width) {
  const uint128 tuples_starting_at_x =
      checked_pow(static_cast<std::uint64_t>(array_length),
                  static_cast<unsigned>(tuple_width - 1));
  return tuples_starting_at_x - n1(x, array_length, tuple_width);
}

RankDistribution exact_rank_distribution(const MPParams& params) {
  const MPDerived d = derive(params);
  const int n = params.array_length;
  const int m = params.tuple_width;
  const double sin_a = std::sin(d.alpha);
  const double cos2 = 1.0 - sin_a * sin_a;
  const double sin2 = sin_a * sin_a;
  const uint128 per_first = d.n_pow_m / static_cast<std::uint64_t>(n);  // N^(m-1)
  const double inv_nu = 1.0 / to_double(d.nu);
  const double inv_mu = 1.0 / to_double(d.mu);

  RankDistribution dist;
  dist.probs.assign(static_cast<std::size_t>(n), 0.0);
  uint128 b = 0;  // C(x-1, m-1), zero while x < m
  for (int x = 1; x <= n; ++x) {
    if (x == m) {
      b = 1;
    }
    const uint128 ones = b;
    const uint128 zeros = per_first - ones;
    dist.probs[static_cast<std::size_t>(x - 1)] =
        cos2 * to_double(zeros) * inv_nu + sin2 * to_double(ones) * inv_mu;
    if (x >= m && x < n) {
      b = checked_mul(b, static_cast<std::uint64_t>(x)) /
          static_cast<std::uint64_t>(x - m + 1);
    }
  }
  return dist;
}

double p_least(const MPParams& params) {
  const MPDerived d = derive(params);
  const double s = std::sin(d.alpha);
  return static_cast<double>(params.tuple_width) / params.array_length * s * s;
}

double p_least_approx(int array_length, int tuple_width, int iterations) {
  if (tuple_width < 2) {
    throw std::invalid_argument("p_least_approx: tuple width m must be at least 2");
  }
  double factorial = 1.0;
  for (int i = 2; i <= tuple_width; ++i) {
    factorial *= i;
  }
  const double s = std::sin((2.0 * iterations + 1.0) / std::sqrt(factorial));
  return static_cast<double>(tuple_width) / array_length * s * s;
}

int p_optimal(int tuple_width) {
  if (tuple_width < 2) {
    throw std::invalid_argument("p_optimal: tuple width m must be at least 2");
  }
  double factorial = 1.0;
  for (int i = 2; i <= tuple_width; ++i) {
    factorial *= i;
  }
  const double pi = std::acos(-1.0);
  const long rounded = std::lround(pi / 4.0 * std::sqrt(factorial) - 0.5);
  return static_cast<int>(std::max(0L, rounded));
}

}  // namespace qknn

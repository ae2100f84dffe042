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

#ifndef QKNN_RNG_HPP
#define QKNN_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qknn {

/// splitmix64 finalizer. Bijective on 64-bit words; used to derive child
/// seeds so that streams indexed by (seed, tuple) are decorrelated.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Stable seed derivation: h = mix64(master), then h = mix64(h ^ v) for each
/// tuple component v in order. Any run with the same master seed and tuple
/// reproduces the same stream regardless of scheduling.
constexpr std::uint64_t combine_seed(std::uint64_t master,
                                     std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t v : parts) {
    h = mix64(h ^ v);
  }
  return h;
}

/// Deterministic random stream. Wraps std::mt19937_64 (whose output sequence
/// is fixed by the standard) and exposes only draws with a pinned encoding,
/// so identical seeds give identical results on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qknn

#endif  // QKNN_RNG_HPP

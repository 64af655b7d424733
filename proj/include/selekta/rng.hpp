/*
 * Copyright 2026 The Selekta Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SELEKTA_RNG_HPP_
#define SELEKTA_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "selekta/errors.hpp"

namespace selekta {

namespace detail {

// splitmix64: used only to expand seeds into generator state.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace detail

/// Deterministic pseudo-random stream (xoshiro256**) with splittable
/// substreams.  All operations use 64-bit integer arithmetic only, so any
/// two builds produce identical sequences for identical seeds, regardless
/// of platform, compiler, or standard library.
///
/// Substreams created by split() are statistically independent of the
/// parent and of each other; split(i) of an equally-seeded stream always
/// yields the same substream, no matter how much the parent has advanced.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = detail::splitmix64(x);
  }

  /// Child stream identified by `stream_id`, derived from the seed alone.
  RngStream split(std::uint64_t stream_id) const {
    std::uint64_t x = seed_ ^ detail::rotl64(stream_id + 1, 17);
    std::uint64_t child_seed = detail::splitmix64(x);
    child_seed ^= detail::splitmix64(x);
    return RngStream(child_seed);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound); unbiased via rejection sampling.
  std::size_t uniform_below(std::size_t bound) {
    if (bound == 0) throw ArgumentError("uniform_below: bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % b);
  }

  /// Standard normal deviate (Box-Muller, cosine branch).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]: keeps log() finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return radius * std::cos(2.0 * M_PI * u2);
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = uniform_below(i);
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
};

}  // namespace selekta

#endif  // SELEKTA_RNG_HPP_

/*
 Copyright 2026 The aptctl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef APTCTL_RNG_HPP
#define APTCTL_RNG_HPP

#include <cstdint>
#include <random>

namespace aptctl {

/// splitmix64 finalizer. Used to derive independent child seeds from one
/// 64-bit master seed so every consumer (generator, sweep replicate, ...)
/// gets its own reproducible stream.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream + 1));
}

inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t a,
                                std::uint64_t b) {
  return split_seed(split_seed(base, a), b);
}

/// Deterministic RNG. mt19937_64 raw output is pinned by the standard; the
/// distribution helpers below are hand-rolled so that sequences are identical
/// across standard libraries (std::uniform_*_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  int next_int(int bound) {
    // rejection sampling, no modulo bias
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return static_cast<int>(v % b);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aptctl

#endif  // APTCTL_RNG_HPP

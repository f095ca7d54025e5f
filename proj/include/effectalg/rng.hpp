// Copyright 2026 The effectalg Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace effectalg {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Key for stream `index` under `seed`.
constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index));
}

/// FNV-1a, used to derive stream indices from axiom identifiers.
constexpr std::uint64_t hash_name(std::string_view name) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/**
 * Counter-based generator: the k-th draw of stream `key` is
 * mix64(key + k·0x9E3779B97F4A7C15), k = 0, 1, 2, ...
 *
 * Uniform doubles take the top 53 bits; normals use Box–Muller on two
 * consecutive uniforms without caching the second variate. Nothing here
 * depends on the standard library's distribution implementations, so streams
 * are identical on every platform.
 */
class Rng {
public:
  explicit Rng(std::uint64_t key) noexcept : key_(key) {}
  Rng(std::uint64_t seed, std::uint64_t stream) noexcept : key_(mix(seed, stream)) {}

  std::uint64_t next_u64() noexcept {
    return mix64(key_ + counter_++ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) noexcept {
    return n == 0 ? 0 : static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal() noexcept {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Rng split(std::uint64_t index) const noexcept { return Rng(mix(key_, index)); }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace effectalg

// Copyright 2026 The auxsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUXSIM_RNG_HPP_
#define AUXSIM_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace auxsim {

// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic generator. All randomness in the library flows from an
// explicit 64-bit seed; Split() derives a child stream keyed by a counter so
// that sibling streams never depend on how much the parent has consumed.
// Output is bit-identical across platforms: mt19937_64 is fully specified and
// the double/int conversions below avoid the implementation-defined std
// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(Mix64(seed)) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., n - 1}; n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t UniformIndex(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do {
      r = NextU64();
    } while (r >= limit);
    return r % n;
  }

  bool Coin() { return (NextU64() >> 63) != 0; }

  Rng Split(std::uint64_t stream) const {
    return Rng(Mix64(seed_ ^ Mix64(stream + 0x5851f42d4c957f2dULL)));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace auxsim

#endif  // AUXSIM_RNG_HPP_

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

#ifndef AUXSIM_DISTRIBUTION_HPP_
#define AUXSIM_DISTRIBUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "auxsim/rng.hpp"

namespace auxsim {

inline constexpr std::size_t kMaxDomainSize = 4096;
inline constexpr int kMaxAuxBits = 16;
inline constexpr double kMassTolerance = 1e-12;

// Neumaier-compensated sum; keeps table masses within kMassTolerance even
// for the largest allowed tables.
double StableSum(std::span<const double> values);

// Shape shared by joint tables, channels and distinguisher tables: x ranges
// over 0..domain_size-1, z over 0..2^aux_bits-1, storage row-major in [x][z].
struct Shape {
  std::size_t domain_size = 0;
  int aux_bits = 0;

  std::size_t aux_size() const { return std::size_t{1} << aux_bits; }
  std::size_t cells() const { return domain_size * aux_size(); }
  std::size_t index(std::size_t x, std::uint32_t z) const {
    return x * aux_size() + z;
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

// Throws kInvalidArgument unless 1 <= N <= kMaxDomainSize, 0 <= m <= 16.
void ValidateShape(const Shape& shape);

// Exact probability table for (X, Z). Immutable.
class JointDistribution {
 public:
  // Validates non-negativity and total mass 1 within kMassTolerance.
  static JointDistribution Create(Shape shape, std::vector<double> prob);

  const Shape& shape() const { return shape_; }
  std::size_t domain_size() const { return shape_.domain_size; }
  int aux_bits() const { return shape_.aux_bits; }
  std::size_t aux_size() const { return shape_.aux_size(); }

  double operator()(std::size_t x, std::uint32_t z) const {
    return prob_[shape_.index(x, z)];
  }
  std::span<const double> row(std::size_t x) const {
    return std::span<const double>(prob_).subspan(x * aux_size(), aux_size());
  }
  std::span<const double> data() const { return prob_; }

 private:
  JointDistribution(Shape shape, std::vector<double> prob)
      : shape_(shape), prob_(std::move(prob)) {}

  Shape shape_;
  std::vector<double> prob_;
};

// Conditional law q[x][z] = Pr[output z | input x]. Every row is a
// distribution. Immutable.
class Channel {
 public:
  static Channel Create(Shape shape, std::vector<double> cond);
  static Channel Uniform(Shape shape);

  const Shape& shape() const { return shape_; }
  std::size_t domain_size() const { return shape_.domain_size; }
  int aux_bits() const { return shape_.aux_bits; }
  std::size_t aux_size() const { return shape_.aux_size(); }

  double operator()(std::size_t x, std::uint32_t z) const {
    return cond_[shape_.index(x, z)];
  }
  std::span<const double> row(std::size_t x) const {
    return std::span<const double>(cond_).subspan(x * aux_size(), aux_size());
  }
  std::span<const double> data() const { return cond_; }

 private:
  Channel(Shape shape, std::vector<double> cond)
      : shape_(shape), cond_(std::move(cond)) {}

  Shape shape_;
  std::vector<double> cond_;
};

std::vector<double> MarginalX(const JointDistribution& dist);

// Zero-mass rows become uniform.
Channel TrueChannel(const JointDistribution& dist);

// p[x][z] = px[x] * q[x][z].
JointDistribution Compose(std::span<const double> px, const Channel& channel);

// Half the L1 distance between the two tables.
double StatisticalDistance(const JointDistribution& a,
                           const JointDistribution& b);

// Draws (x, z) pairs from a joint table by inverse-CDF lookup.
class Sampler {
 public:
  Sampler(const JointDistribution& dist, std::uint64_t seed);

  std::pair<std::size_t, std::uint32_t> Next();

 private:
  Shape shape_;
  std::vector<double> cdf_;
  Rng rng_;
};

std::pair<std::size_t, std::uint32_t> Sample(const JointDistribution& dist,
                                             std::uint64_t seed);

}  // namespace auxsim

#endif  // AUXSIM_DISTRIBUTION_HPP_

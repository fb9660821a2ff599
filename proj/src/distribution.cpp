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

#include "auxsim/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "auxsim/error.hpp"

namespace auxsim {

double StableSum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

void ValidateShape(const Shape& shape) {
  if (shape.domain_size < 1 || shape.domain_size > kMaxDomainSize) {
    std::ostringstream msg;
    msg << "domain_size must be in [1, " << kMaxDomainSize << "], got "
        << shape.domain_size;
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
  if (shape.aux_bits < 0 || shape.aux_bits > kMaxAuxBits) {
    std::ostringstream msg;
    msg << "aux_bits must be in [0, " << kMaxAuxBits << "], got "
        << shape.aux_bits;
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
}

namespace {

void CheckEntries(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      std::ostringstream msg;
      msg << what << ": entry " << i << " is negative or not finite ("
          << values[i] << ")";
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
  }
}

}  // namespace

JointDistribution JointDistribution::Create(Shape shape,
                                            std::vector<double> prob) {
  ValidateShape(shape);
  if (prob.size() != shape.cells()) {
    Fail(ErrorCode::kDimensionMismatch,
         "joint table has " + std::to_string(prob.size()) +
             " entries, expected " + std::to_string(shape.cells()));
  }
  CheckEntries(prob, "joint distribution");
  const double mass = StableSum(prob);
  if (std::abs(mass - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "joint distribution mass is " << mass << ", expected 1";
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
  return JointDistribution(shape, std::move(prob));
}

Channel Channel::Create(Shape shape, std::vector<double> cond) {
  ValidateShape(shape);
  if (cond.size() != shape.cells()) {
    Fail(ErrorCode::kDimensionMismatch,
         "channel table has " + std::to_string(cond.size()) +
             " entries, expected " + std::to_string(shape.cells()));
  }
  CheckEntries(cond, "channel");
  const std::size_t width = shape.aux_size();
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    const double mass =
        StableSum(std::span<const double>(cond).subspan(x * width, width));
    if (std::abs(mass - 1.0) > kMassTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "channel row " << x << " sums to " << mass << ", expected 1";
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
  }
  return Channel(shape, std::move(cond));
}

Channel Channel::Uniform(Shape shape) {
  ValidateShape(shape);
  return Channel(shape, std::vector<double>(
                            shape.cells(),
                            1.0 / static_cast<double>(shape.aux_size())));
}

std::vector<double> MarginalX(const JointDistribution& dist) {
  std::vector<double> px(dist.domain_size());
  for (std::size_t x = 0; x < px.size(); ++x) px[x] = StableSum(dist.row(x));
  return px;
}

Channel TrueChannel(const JointDistribution& dist) {
  const Shape& shape = dist.shape();
  const std::size_t width = shape.aux_size();
  const double uniform = 1.0 / static_cast<double>(width);
  std::vector<double> cond(shape.cells());
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    const auto row = dist.row(x);
    const double mass = StableSum(row);
    for (std::size_t z = 0; z < width; ++z) {
      cond[x * width + z] = mass > 0.0 ? row[z] / mass : uniform;
    }
  }
  return Channel::Create(shape, std::move(cond));
}

JointDistribution Compose(std::span<const double> px, const Channel& channel) {
  const Shape& shape = channel.shape();
  if (px.size() != shape.domain_size) {
    Fail(ErrorCode::kDimensionMismatch,
         "marginal has " + std::to_string(px.size()) +
             " entries but channel domain is " +
             std::to_string(shape.domain_size));
  }
  const std::size_t width = shape.aux_size();
  std::vector<double> prob(shape.cells());
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    for (std::size_t z = 0; z < width; ++z) {
      prob[x * width + z] = px[x] * channel.data()[x * width + z];
    }
  }
  return JointDistribution::Create(shape, std::move(prob));
}

double StatisticalDistance(const JointDistribution& a,
                           const JointDistribution& b) {
  if (a.shape() != b.shape()) {
    Fail(ErrorCode::kDimensionMismatch,
         "statistical distance of differently shaped distributions");
  }
  std::vector<double> diffs(a.data().size());
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    diffs[i] = std::abs(a.data()[i] - b.data()[i]);
  }
  return std::clamp(0.5 * StableSum(diffs), 0.0, 1.0);
}

Sampler::Sampler(const JointDistribution& dist, std::uint64_t seed)
    : shape_(dist.shape()), cdf_(dist.data().size()), rng_(seed) {
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf_.size(); ++i) {
    acc += dist.data()[i];
    cdf_[i] = acc;
  }
}

std::pair<std::size_t, std::uint32_t> Sampler::Next() {
  const double u = rng_.Uniform01() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  std::size_t cell = static_cast<std::size_t>(it - cdf_.begin());
  if (cell >= cdf_.size()) cell = cdf_.size() - 1;
  return {cell / shape_.aux_size(),
          static_cast<std::uint32_t>(cell % shape_.aux_size())};
}

std::pair<std::size_t, std::uint32_t> Sample(const JointDistribution& dist,
                                             std::uint64_t seed) {
  return Sampler(dist, seed).Next();
}

}  // namespace auxsim

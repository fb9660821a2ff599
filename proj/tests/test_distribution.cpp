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

#include <cmath>
#include <map>
#include <random>

#include "auxsim/distribution.hpp"
#include "auxsim/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace auxsim;

namespace {

JointDistribution Joint(std::size_t n, int m, std::vector<double> p) {
  return JointDistribution::Create(Shape{n, m}, std::move(p));
}

JointDistribution RandomJoint(std::size_t n, int m, std::mt19937_64& gen) {
  return Joint(n, m, oracle::RandomJoint(n, std::size_t{1} << m, gen));
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("marginal_x") {
  auto uniform = Joint(2, 1, {.25, .25, .25, .25});
  CHECK(MarginalX(uniform) == std::vector<double>{.5, .5});

  for (int m = 0; m <= 4; ++m) {
    std::vector<double> p(std::size_t{1} << m, 1.0 / (1 << m));
    CHECK(MarginalX(Joint(1, m, p)) == std::vector<double>{1.0});
  }

  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = oracle::RandomJoint(4, 4, gen);
    CHECK(MarginalX(Joint(4, 2, p)) == oracle::Marginal(p, 4, 4));
  }
}

TEST_CASE("true_channel") {
  auto copy = TrueChannel(Joint(2, 1, {.5, 0, 0, .5}));
  CHECK(copy(0, 0) == 1.0);
  CHECK(copy(0, 1) == 0.0);
  CHECK(copy(1, 0) == 0.0);
  CHECK(copy(1, 1) == 1.0);

  auto indep = TrueChannel(Joint(2, 1, {.25, .25, .25, .25}));
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(indep(x, 0) == .5);
    CHECK(indep(x, 1) == .5);
  }

  auto ch = TrueChannel(Joint(2, 1, {0.1, 0.3, 0.6, 0.0}));
  CHECK(ch(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ch(0, 1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(ch(1, 0) == 1.0);
  CHECK(ch(1, 1) == 0.0);

  SUBCASE("zero-mass rows become uniform") {
    auto z = TrueChannel(Joint(2, 2, {0, 0, 0, 0, .1, .2, .3, .4}));
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(z(0, v) == .25);
  }
}

TEST_CASE("compose") {
  const std::vector<double> point{1, 0};
  auto id = Channel::Create(Shape{2, 1}, {1, 0, 0, 1});
  auto pm = Compose(point, id);
  CHECK(pm(0, 0) == 1.0);
  CHECK(pm(0, 1) + pm(1, 0) + pm(1, 1) == 0.0);

  const std::vector<double> half{.5, .5};
  auto joint = Compose(half, Channel::Create(Shape{2, 1}, {.25, .75, 1, 0}));
  CHECK(joint(0, 0) == .125);
  CHECK(joint(0, 1) == .375);
  CHECK(joint(1, 0) == .5);
  CHECK(joint(1, 1) == 0.0);

  auto hand = Joint(2, 1, {0.1, 0.3, 0.6, 0.0});
  auto back = Compose(MarginalX(hand), TrueChannel(hand));
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(std::fabs(back.data()[c] - hand.data()[c]) <= 1e-12);
  }
}

TEST_CASE("round trip through marginal and true channel") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 32;
    const int m = static_cast<int>(gen() % 5);
    auto d = RandomJoint(n, m, gen);
    auto back = Compose(MarginalX(d), TrueChannel(d));
    for (std::size_t c = 0; c < d.data().size(); ++c) {
      REQUIRE(std::fabs(back.data()[c] - d.data()[c]) <= 1e-12);
    }
    CHECK(StatisticalDistance(d, back) <= 1e-12);
  }
}

TEST_CASE("statistical_distance") {
  std::mt19937_64 gen(3);
  auto d = RandomJoint(3, 2, gen);
  CHECK(StatisticalDistance(d, d) == 0.0);

  auto a = Joint(2, 1, {1, 0, 0, 0});
  auto b = Joint(2, 1, {0, 0, 0, 1});
  CHECK(StatisticalDistance(a, b) == 1.0);

  for (int trial = 0; trial < 50; ++trial) {
    const auto pa = oracle::RandomJoint(2, 2, gen);
    const auto pb = oracle::RandomJoint(2, 2, gen);
    CHECK(StatisticalDistance(Joint(2, 1, pa), Joint(2, 1, pb)) ==
          doctest::Approx(oracle::ExhaustiveBooleanDistance(pa, pb)).epsilon(1e-13));
  }
}

TEST_CASE("statistical distance is a metric") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 16;
    const int m = static_cast<int>(gen() % 4);
    auto a = RandomJoint(n, m, gen);
    auto b = RandomJoint(n, m, gen);
    auto c = RandomJoint(n, m, gen);
    CHECK(StatisticalDistance(a, b) == StatisticalDistance(b, a));
    CHECK(StatisticalDistance(a, c) <=
          StatisticalDistance(a, b) + StatisticalDistance(b, c) + 1e-12);
  }
}

TEST_CASE("channel rows stay normalized") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen() % 64;
    const int m = static_cast<int>(gen() % 6);
    auto d = RandomJoint(n, m, gen);
    for (const Channel& ch : {TrueChannel(d), Channel::Uniform(d.shape())}) {
      for (std::size_t x = 0; x < n; ++x) {
        double s = 0;
        for (double v : ch.row(x)) s += v;
        REQUIRE(std::fabs(s - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("sample") {
  auto pm = Joint(3, 2, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
  Sampler fixed(pm, 99);
  for (int i = 0; i < 1000; ++i) {
    CHECK(fixed.Next() == std::pair<std::size_t, std::uint32_t>{1, 2});
  }

  std::mt19937_64 gen(1);
  auto d = RandomJoint(5, 3, gen);
  Sampler s1(d, 1234), s2(d, 1234);
  for (int i = 0; i < 10000; ++i) REQUIRE(s1.Next() == s2.Next());
  CHECK(Sample(d, 77) == Sample(d, 77));

  auto uniform = Joint(2, 1, {.25, .25, .25, .25});
  Sampler draws(uniform, 2024);
  std::map<std::pair<std::size_t, std::uint32_t>, int> counts;
  const int total = 1000000;
  for (int i = 0; i < total; ++i) ++counts[draws.Next()];
  CHECK(counts.size() == 4);
  for (const auto& [cell, count] : counts) {
    CHECK(std::fabs(static_cast<double>(count) / total - 0.25) <= 0.005);
  }
}

TEST_CASE("validation") {
  CHECK(CodeOf([] { ValidateShape(Shape{0, 1}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateShape(Shape{4097, 1}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateShape(Shape{2, 17}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { ValidateShape(Shape{4096, 0}); }) == ErrorCode::kOk);
  CHECK(CodeOf([] { Joint(2, 1, {.5, .5, .5}); }) == ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([] { Joint(2, 1, {.5, .5, .5, -.5}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Joint(2, 1, {.25, .25, .25, .25 + 1e-10}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Channel::Create(Shape{1, 1}, {.5, .6}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] {
          const std::vector<double> px{1.0};
          Compose(px, Channel::Uniform(Shape{2, 1}));
        }) == ErrorCode::kDimensionMismatch);
}

}  // TEST_SUITE

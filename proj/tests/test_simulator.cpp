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
#include <numeric>
#include <random>

#include "auxsim/error.hpp"
#include "auxsim/simulator.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace auxsim;

namespace {

JointDistribution RandomJoint(Shape shape, std::mt19937_64& gen) {
  return JointDistribution::Create(
      shape, oracle::RandomJoint(shape.domain_size, shape.aux_size(), gen));
}

Channel RandomChannel(Shape shape, std::mt19937_64& gen) {
  return Channel::Create(
      shape, oracle::RandomChannel(shape.domain_size, shape.aux_size(), gen));
}

Distinguisher RandomReal(Shape shape, std::mt19937_64& gen) {
  return Distinguisher::RealTable(shape, oracle::RandomUnitTable(shape.cells(), gen));
}

// Exact advantage recomputed from tables with the naive oracle.
double OracleAdvantage(const Distinguisher& d, const JointDistribution& target,
                       const Channel& sim) {
  const Shape& s = target.shape();
  return oracle::Advantage({d.Table().begin(), d.Table().end()},
                           {target.data().begin(), target.data().end()},
                           {sim.data().begin(), sim.data().end()}, s.domain_size,
                           s.aux_size());
}

double OracleMaxAdvantage(const DistinguisherClass& cls,
                          const JointDistribution& target, const Channel& sim) {
  double best = 0;
  for (const auto& d : cls.members()) {
    best = std::max(best, std::fabs(OracleAdvantage(d, target, sim)));
  }
  return best;
}

// E_x sum_z P(z|x)^2 for one simulator.
double SecondMoment(const Channel& ch, std::span<const double> px) {
  double s = 0;
  for (std::size_t x = 0; x < px.size(); ++x) {
    for (double v : ch.row(x)) s += px[x] * v * v;
  }
  return s;
}

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("best_response examples") {
  const Shape shape{3, 1};
  auto target = JointDistribution::Create(shape, {.1, .2, .3, .1, .05, .25});
  auto dz = Distinguisher::RealTable(shape, {0, 1, 0, 1, 0, 1});
  auto br = BestResponse(dz, target);
  CHECK(br.h_minus == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(br.h_plus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(br.gamma == doctest::Approx(1 - (.2 + .1 + .25)).epsilon(1e-14));

  auto c = Distinguisher::Constant(shape, 0.4);
  auto flat = BestResponse(c, target);
  CHECK(flat.gamma == 1.0);
  CHECK(flat.h_minus == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(Advantage(c, target, Simulator::TwoPoint(shape, flat).Lower()) == 0.0);
}

TEST_CASE("best response has zero advantage against its distinguisher") {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Shape shape{1 + gen() % 16, static_cast<int>(gen() % 4)};
    auto target = RandomJoint(shape, gen);
    Distinguisher d = RandomReal(shape, gen);
    if (trial % 2) {
      d = Distinguisher::Mixture({d, RandomReal(shape, gen), RandomReal(shape, gen)},
                                 {0.2, 0.3, 0.5});
    }
    auto sim = Simulator::TwoPoint(shape, BestResponse(d, target)).Lower();
    CHECK(std::fabs(OracleAdvantage(d, target, sim)) <= 1e-9);
  }
}

TEST_CASE("solve_game") {
  std::mt19937_64 gen(103);
  const Shape shape{8, 2};
  auto target = RandomJoint(shape, gen);

  SUBCASE("singleton class") {
    auto d = RandomReal(shape, gen);
    auto game = SolveGame(DistinguisherClass::Create({d}, false), target,
                          GameOptions{0.1, 0, 0});
    CHECK(game.eps_achieved == doctest::Approx(0.0).scale(1e-9));
    REQUIRE(game.mixture.components().size() == 1);
    CHECK(*game.mixture.components()[0].two_point() == BestResponse(d, target));
  }

  SUBCASE("random boolean class converges within the schedule") {
    auto cls = RandomBooleanTables(shape, 50, 42);
    auto game = SolveGame(cls, target, GameOptions{0.1, 0, 0});
    const auto closed = cls.ClosedUnderComplement();
    CHECK(closed.size() == 100);
    CHECK(game.round_budget == GameRoundSchedule(100, 0.1));
    CHECK(GameRoundSchedule(100, 0.1) ==
          static_cast<std::uint64_t>(std::ceil(4 * std::log(200.0) / 0.01)));
    CHECK(game.rounds <= game.round_budget);
    CHECK(game.eps_achieved <= 0.1);
    CHECK(OracleMaxAdvantage(closed, target, game.mixture.Lower()) <= 0.1);
  }

  SUBCASE("every eps_game is reachable") {
    auto cls = RandomRealTables(shape, 20, 7);
    for (double eps : {0.5, 0.2, 0.1, 0.05, 0.02}) {
      auto game = SolveGame(cls, target, GameOptions{eps, 0, 1});
      CHECK(game.eps_achieved <= eps);
      CHECK(OracleMaxAdvantage(cls.ClosedUnderComplement(), target,
                               game.mixture.Lower()) <= eps);
    }
  }

  SUBCASE("deterministic digest") {
    auto cls = RandomBooleanTables(shape, 30, 8);
    auto a = SolveGame(cls, target, GameOptions{0.05, 0, 5});
    auto b = SolveGame(cls, target, GameOptions{0.05, 0, 5});
    auto c = SolveGame(cls, target, GameOptions{0.05, 0, 6});
    CHECK(a.weight_history_digest == b.weight_history_digest);
    CHECK(a.weight_history_digest != c.weight_history_digest);
    CHECK(a.rounds == b.rounds);
  }

  CHECK_THROWS_AS(SolveGame(RandomBooleanTables(shape, 3, 1), target,
                            GameOptions{0.0, 0, 0}),
                  Error);
}

TEST_CASE("sparsify") {
  std::mt19937_64 gen(107);
  const Shape shape{6, 2};
  auto target = RandomJoint(shape, gen);
  auto cls = RandomBooleanTables(shape, 40, 9).ClosedUnderComplement();

  auto single = Simulator::TwoPoint(shape, BestResponse(cls[0], target));
  auto mix1 = Simulator::WeightedMixture({single}, {1.0});
  for (std::uint64_t t : {1, 7, 1000}) {
    auto r = Sparsify(mix1, t, cls, target, 0.0, 0, 3);
    auto a = r.sample_list.Lower();
    auto b = single.Lower();
    for (std::size_t c = 0; c < shape.cells(); ++c) CHECK(a.data()[c] == b.data()[c]);
    CHECK(r.retries_used == 0);
    CHECK(r.sample_list.sample_count() == t);
  }

  CHECK(SparsifySampleCount(2, 0.25) == 64);
  auto game = SolveGame(cls, target, GameOptions{0.1, 0, 0});
  auto r = Sparsify(game.mixture, 64, cls, target, 0.25, 32, 11);
  CHECK(r.sample_list.sample_count() == 64);
  CHECK(r.max_advantage <= r.mix_advantage + 0.25);
  CHECK(OracleMaxAdvantage(cls, target, r.sample_list.Lower()) <= game.eps_achieved + 0.25);
}

TEST_CASE("sampling second-moment law") {
  std::mt19937_64 gen(109);
  const Shape shape{16, 2};
  auto target = RandomJoint(shape, gen);
  auto cls = RandomRealTables(shape, 30, 13);
  auto mix = SolveGame(cls, target, GameOptions{0.05, 0, 0}).mixture;
  const auto px = MarginalX(target);
  const Channel lowered = mix.Lower();

  double spread = 0;
  for (std::size_t i = 0; i < mix.components().size(); ++i) {
    spread += mix.weights()[i] * SecondMoment(mix.components()[i].Lower(), px);
  }
  spread -= SecondMoment(lowered, px);

  const std::uint64_t t = SparsifySampleCount(2, 0.25);
  std::vector<double> gaps;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    gaps.push_back(L2ChannelGap(DrawSampleList(mix, t, rng).Lower(), lowered, px));
  }
  const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / gaps.size();
  double var = 0;
  for (double g : gaps) var += (g - mean) * (g - mean);
  const double se = std::sqrt(var / (gaps.size() - 1) / gaps.size());
  CHECK(mean <= spread / t + 3 * se);
  CHECK(mean <= 1.05 / t);
}

TEST_CASE("l2_channel_gap") {
  std::mt19937_64 gen(113);
  const Shape shape{5, 2};
  auto a = RandomChannel(shape, gen);
  const std::vector<double> px{.1, .2, .3, .2, .2};
  CHECK(L2ChannelGap(a, a, px) == 0.0);

  const std::vector<double> one{1.0};
  CHECK(L2ChannelGap(Channel::Create(Shape{1, 1}, {1, 0}),
                     Channel::Create(Shape{1, 1}, {0, 1}), one) == 2.0);

  for (int trial = 0; trial < 50; ++trial) {
    auto x = RandomChannel(shape, gen);
    auto y = RandomChannel(shape, gen);
    CHECK(L2ChannelGap(x, y, px) ==
          doctest::Approx(oracle::L2Gap({x.data().begin(), x.data().end()},
                                        {y.data().begin(), y.data().end()}, px, 4))
              .epsilon(1e-14));
  }
}

TEST_CASE("advantage_l2_bound_check") {
  std::mt19937_64 gen(127);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Shape shape{1 + gen() % 12, static_cast<int>(gen() % 4)};
    auto target = RandomJoint(shape, gen);
    auto a = RandomChannel(shape, gen);
    auto b = RandomChannel(shape, gen);
    const auto px = MarginalX(target);
    auto cls = RandomRealTables(shape, 5, trial);
    if (trial == 0) CHECK(AdvantageL2BoundCheck(a, a, px, cls, target));
    if (!AdvantageL2BoundCheck(a, b, px, cls, target)) ++violations;

    double l1 = 0;
    for (std::size_t x = 0; x < shape.domain_size; ++x) {
      for (std::uint32_t z = 0; z < shape.aux_size(); ++z) {
        l1 += px[x] * std::fabs(a(x, z) - b(x, z));
      }
    }
    const double l2 = std::sqrt(std::ldexp(1.0, shape.aux_bits) * L2ChannelGap(a, b, px));
    CHECK(l1 <= l2 + 1e-12);
    for (const auto& d : cls.members()) {
      CHECK(std::fabs(Advantage(d, target, a) - Advantage(d, target, b)) <= l1 + 1e-12);
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("lowering is exact") {
  std::mt19937_64 gen(131);
  const Shape shape{10, 3};
  auto target = RandomJoint(shape, gen);
  auto cls = RandomRealTables(shape, 10, 3);
  auto res = SimulateFull(target, cls, SimulationOptions{0.2, 4, 0, 32});
  const auto& sl = res.simulator;
  REQUIRE(sl.kind() == SimulatorKind::kSampleList);
  const double t = static_cast<double>(sl.sample_count());
  for (const auto& d : cls.members()) {
    double via_list = 0;
    for (std::size_t i = 0; i < sl.components().size(); ++i) {
      via_list += sl.counts()[i] / t * Advantage(d, target, sl.components()[i].Lower());
    }
    CHECK(std::fabs(via_list - Advantage(d, target, sl.Lower())) <= 1e-12);
  }

  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t x = rng.UniformIndex(shape.domain_size);
    CHECK(sl.Sample(x, rng) < shape.aux_size());
  }
}

TEST_CASE("simulate_full") {
  SUBCASE("constant class") {
    const Shape shape{4, 2};
    std::mt19937_64 gen(137);
    auto target = RandomJoint(shape, gen);
    auto cls = DistinguisherClass::Create({Distinguisher::Constant(shape, 0.6)}, false);
    auto res = SimulateFull(target, cls, SimulationOptions{0.1, 0, 0, 32});
    CHECK(res.game.eps_achieved == 0.0);
    CHECK(res.max_advantage == 0.0);
  }

  SUBCASE("exhaustive class on the copy instance") {
    const Shape shape{2, 1};
    auto copy = JointDistribution::Create(shape, {.5, 0, 0, .5});
    auto res = SimulateFull(copy, AllBooleanTables(shape), SimulationOptions{0.1, 0, 0, 32});
    CHECK(res.game.eps_achieved <= 0.05);
    CHECK(res.max_advantage <= 0.1);
    CHECK(StatisticalDistance(copy, Compose(MarginalX(copy), res.simulator.Lower())) <= 0.1);
  }

  SUBCASE("largest corpus shape") {
    const Shape shape{256, 3};
    std::mt19937_64 gen(139);
    auto target = RandomJoint(shape, gen);
    auto cls = RandomBooleanTables(shape, 128, 17);
    auto res = SimulateFull(target, cls, SimulationOptions{0.05, 17, 0, 32});
    CHECK(OracleMaxAdvantage(cls.ClosedUnderComplement(), target, res.simulator.Lower()) <=
          0.05);
    const auto& c = res.complexity;
    CHECK(c.base_cost_s == 1);
    CHECK(c.t_used == SparsifySampleCount(3, 0.025));
    CHECK(c.idealized_calls == c.t_used * 2 * 8);
    CHECK(c.idealized_size == c.idealized_calls);
    CHECK(static_cast<double>(c.idealized_calls) <= 16.0 * 1 * 64 / 0.0025);
    CHECK(c.within_budget);
    CHECK(c.rho_used == 0);
  }

  SUBCASE("real-valued class reports digit precision") {
    const Shape shape{8, 1};
    std::mt19937_64 gen(149);
    auto target = RandomJoint(shape, gen);
    auto res = SimulateFull(target, RandomRealTables(shape, 10, 2, 5),
                            SimulationOptions{0.1, 0, 0, 32});
    CHECK(res.complexity.rho_used == 4);
    CHECK(res.complexity.base_cost_s == 5);
    CHECK(res.complexity.idealized_size == 5 * res.complexity.idealized_calls);
    CHECK(res.complexity.within_budget);
  }

  SUBCASE("deterministic") {
    const Shape shape{32, 2};
    std::mt19937_64 gen(151);
    auto target = RandomJoint(shape, gen);
    auto cls = RandomBooleanTables(shape, 20, 4);
    auto a = SimulateFull(target, cls, SimulationOptions{0.1, 9, 0, 32});
    auto b = SimulateFull(target, cls, SimulationOptions{0.1, 9, 0, 32});
    auto la = a.simulator.Lower();
    auto lb = b.simulator.Lower();
    CHECK(std::equal(la.data().begin(), la.data().end(), lb.data().begin()));
    CHECK(a.game.weight_history_digest == b.game.weight_history_digest);
  }

  SUBCASE("validation") {
    const Shape shape{2, 1};
    auto copy = JointDistribution::Create(shape, {.5, 0, 0, .5});
    CHECK_THROWS_AS(SimulateFull(copy, AllBooleanTables(shape), SimulationOptions{0.0}),
                    Error);
    CHECK_THROWS_AS(SimulateFull(copy, AllBooleanTables(shape), SimulationOptions{1.0}),
                    Error);
    CHECK_THROWS_AS(SimulateFull(copy, RandomBooleanTables(Shape{3, 1}, 2, 1),
                                 SimulationOptions{0.1}),
                    Error);
  }
}

TEST_CASE("achieved advantage does not grow as eps shrinks") {
  std::mt19937_64 gen(157);
  const Shape shape{16, 2};
  auto target = RandomJoint(shape, gen);
  auto cls = RandomBooleanTables(shape, 24, 21);
  double previous = 1.0;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    auto res = SimulateFull(target, cls, SimulationOptions{eps, 0, 0, 32});
    CHECK(res.max_advantage <= eps);
    CHECK(res.max_advantage <= previous);
    previous = res.max_advantage;
  }
}

}  // TEST_SUITE

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

#ifndef AUXSIM_SIMULATOR_HPP_
#define AUXSIM_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "auxsim/distinguisher.hpp"
#include "auxsim/distribution.hpp"
#include "auxsim/rng.hpp"

namespace auxsim {

// Randomized map x -> z that outputs h_minus[x] with probability gamma and
// h_plus[x] otherwise.
struct TwoPointMix {
  std::vector<std::uint32_t> h_minus;
  std::vector<std::uint32_t> h_plus;
  double gamma = 1.0;

  friend bool operator==(const TwoPointMix&, const TwoPointMix&) = default;
};

enum class SimulatorKind {
  kTrueChannel,
  kTwoPointMix,
  kWeightedMixture,
  kSampleList,
};

const char* SimulatorKindName(SimulatorKind kind);

// A randomized simulator in one of four representations. Every
// representation lowers exactly to a Channel. Cheap to copy.
class Simulator {
 public:
  static Simulator FromChannel(Channel channel);
  static Simulator TwoPoint(Shape shape, TwoPointMix mix);
  static Simulator WeightedMixture(std::vector<Simulator> components,
                                   std::vector<double> weights);
  // Component i is used with probability counts[i] / sum(counts).
  static Simulator SampleList(std::vector<Simulator> components,
                              std::vector<std::uint64_t> counts);

  SimulatorKind kind() const;
  const Shape& shape() const;

  // Output law per x.
  Channel Lower() const;

  // Adds weight * (output law) to a row-major [x][z] accumulator.
  void AccumulateInto(std::span<double> cond, double weight) const;

  // Draws one output for input x.
  std::uint32_t Sample(std::size_t x, Rng& rng) const;

  const Channel* channel() const;
  const TwoPointMix* two_point() const;
  std::span<const Simulator> components() const;
  std::span<const double> weights() const;
  std::span<const std::uint64_t> counts() const;
  // Number of entries t of a sample list (sum of counts), else 1.
  std::uint64_t sample_count() const;

 private:
  struct State;
  explicit Simulator(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  std::shared_ptr<const State> state_;
};

struct ComplexityReport {
  std::uint64_t base_cost_s = 0;
  // Distinguisher calls with each mixture-distinguisher evaluation counted
  // once: t components, each 2 * 2^m calls.
  std::uint64_t idealized_calls = 0;
  // Same with every mixture component evaluation counted.
  std::uint64_t actual_calls = 0;
  // base_cost_s * idealized_calls.
  std::uint64_t idealized_size = 0;
  // floor(16 * s * 2^(2m) / eps^2), saturating.
  std::uint64_t budget_bound = 0;
  std::uint64_t t_used = 0;
  int rho_used = 0;
  bool within_budget = false;
};

struct GameResult {
  Simulator mixture;
  std::uint64_t rounds = 0;
  std::uint64_t round_budget = 0;
  double eps_achieved = 0.0;
  std::string weight_history_digest;
};

// Perfect simulator for one (possibly mixture) distinguisher: h_minus and
// h_plus minimize / maximize d(x, .) with ties to the lowest z, and gamma
// matches E d(X, Z) exactly.
TwoPointMix BestResponse(const Distinguisher& d,
                         const JointDistribution& target);
TwoPointMix BestResponseTable(std::span<const double> table,
                              const JointDistribution& target,
                              std::span<const double> px);

struct GameOptions {
  double eps_game = 0.1;
  // Lower bound on the round budget; the default schedule
  // ceil(4 ln(2K) / eps_game^2) is used when larger.
  std::uint64_t max_rounds = 0;
  std::uint64_t seed = 0;
};

// ceil(4 ln(2K) / eps^2).
std::uint64_t GameRoundSchedule(std::size_t class_size, double eps_game);

// Multiplicative weights over the complement-closed class against
// best-responding simulators. Throws kNonConvergence when the round budget
// is exhausted above eps_game.
GameResult SolveGame(const DistinguisherClass& cls,
                     const JointDistribution& target,
                     const GameOptions& options);

// ceil(2^m / eps^2).
std::uint64_t SparsifySampleCount(int aux_bits, double eps);

// t i.i.d. draws from the mixture weights, grouped by component.
Simulator DrawSampleList(const Simulator& mix, std::uint64_t t, Rng& rng);

struct SparsifyResult {
  Simulator sample_list;
  std::uint32_t retries_used = 0;
  double mix_advantage = 0.0;
  double max_advantage = 0.0;
  std::size_t witness = 0;
};

// Redraws until max advantage of the sample list is within eps of the
// mixture's. Throws kSparsifyFailed after max_retries extra draws.
SparsifyResult Sparsify(const Simulator& mix, std::uint64_t t,
                        const DistinguisherClass& cls,
                        const JointDistribution& target, double eps,
                        std::uint32_t max_retries, std::uint64_t seed);

// E_{x ~ px} sum_z (a[x][z] - b[x][z])^2.
double L2ChannelGap(const Channel& a, const Channel& b,
                    std::span<const double> px);

// For every member, |adv(a) - adv(b)| <= 2^(m/2) * sqrt(L2ChannelGap).
bool AdvantageL2BoundCheck(const Channel& a, const Channel& b,
                           std::span<const double> px,
                           const DistinguisherClass& cls,
                           const JointDistribution& target);

struct SimulationOptions {
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 0;
  std::uint32_t max_retries = 32;
};

struct SimulationResult {
  Simulator simulator;
  ComplexityReport complexity;
  GameResult game;
  double max_advantage = 0.0;
  std::size_t witness = 0;
  std::uint32_t retries_used = 0;
};

// Game at eps/2, then sparsification with t = ceil(2^m (eps/2)^-2) and an
// extra eps/2 allowance.
SimulationResult SimulateFull(const JointDistribution& target,
                              const DistinguisherClass& cls,
                              const SimulationOptions& options);

}  // namespace auxsim

#endif  // AUXSIM_SIMULATOR_HPP_

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

#include "auxsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "auxsim/error.hpp"

namespace auxsim {

const char* SimulatorKindName(SimulatorKind kind) {
  switch (kind) {
    case SimulatorKind::kTrueChannel:
      return "true_channel";
    case SimulatorKind::kTwoPointMix:
      return "two_point";
    case SimulatorKind::kWeightedMixture:
      return "weighted_mixture";
    case SimulatorKind::kSampleList:
      return "sample_list";
  }
  return "unknown";
}

struct Simulator::State {
  SimulatorKind kind = SimulatorKind::kTrueChannel;
  Shape shape;
  std::optional<Channel> channel;
  std::optional<TwoPointMix> two_point;
  std::vector<Simulator> components;
  std::vector<double> weights;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 1;
};

namespace {

constexpr double kWeightTolerance = 1e-12;

void CheckUnitInterval(double eps, const char* name) {
  if (!(eps > 0.0 && eps < 1.0)) {
    std::ostringstream msg;
    msg << name << " must be in (0, 1), got " << eps;
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// ceil() that ignores sub-ulp noise, so ceil(4 / 0.05^2) is 1600.
std::uint64_t CeilCount(double value) {
  const double c = std::ceil(value * (1.0 - 1e-12));
  if (c >= 0x1.0p63) return std::uint64_t{1} << 63;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

class Fnv1a {
 public:
  void Update(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      hash_ ^= bytes[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::uint64_t HashTwoPoint(const TwoPointMix& mix) {
  Fnv1a h;
  h.Update(mix.h_minus.data(), mix.h_minus.size() * sizeof(std::uint32_t));
  h.Update(mix.h_plus.data(), mix.h_plus.size() * sizeof(std::uint32_t));
  h.Update(&mix.gamma, sizeof(double));
  return h.value();
}

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void CheckTwoPoint(const Shape& shape, const TwoPointMix& mix) {
  ValidateShape(shape);
  if (mix.h_minus.size() != shape.domain_size ||
      mix.h_plus.size() != shape.domain_size) {
    Fail(ErrorCode::kDimensionMismatch,
         "two-point maps must have one entry per x");
  }
  if (!(mix.gamma >= 0.0 && mix.gamma <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "gamma must be in [0, 1]");
  }
  const std::size_t width = shape.aux_size();
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    if (mix.h_minus[x] >= width || mix.h_plus[x] >= width) {
      Fail(ErrorCode::kOutOfRange, "two-point output outside 0..2^m-1");
    }
  }
}

}  // namespace

Simulator Simulator::FromChannel(Channel channel) {
  auto state = std::make_shared<State>();
  state->kind = SimulatorKind::kTrueChannel;
  state->shape = channel.shape();
  state->channel = std::move(channel);
  return Simulator(std::move(state));
}

Simulator Simulator::TwoPoint(Shape shape, TwoPointMix mix) {
  CheckTwoPoint(shape, mix);
  auto state = std::make_shared<State>();
  state->kind = SimulatorKind::kTwoPointMix;
  state->shape = shape;
  state->two_point = std::move(mix);
  return Simulator(std::move(state));
}

Simulator Simulator::WeightedMixture(std::vector<Simulator> components,
                                     std::vector<double> weights) {
  if (components.empty()) {
    Fail(ErrorCode::kInvalidArgument, "mixture needs at least one component");
  }
  if (components.size() != weights.size()) {
    Fail(ErrorCode::kDimensionMismatch, "mixture weight count mismatch");
  }
  const Shape shape = components.front().shape();
  for (const auto& c : components) {
    if (c.shape() != shape) {
      Fail(ErrorCode::kDimensionMismatch, "mixture components differ in shape");
    }
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      Fail(ErrorCode::kInvalidArgument, "mixture weights must be >= 0");
    }
  }
  if (std::abs(StableSum(weights) - 1.0) > kWeightTolerance) {
    Fail(ErrorCode::kInvalidArgument, "mixture weights must sum to 1");
  }
  auto state = std::make_shared<State>();
  state->kind = SimulatorKind::kWeightedMixture;
  state->shape = shape;
  state->components = std::move(components);
  state->weights = std::move(weights);
  return Simulator(std::move(state));
}

Simulator Simulator::SampleList(std::vector<Simulator> components,
                                std::vector<std::uint64_t> counts) {
  if (components.empty()) {
    Fail(ErrorCode::kInvalidArgument, "sample list needs at least one entry");
  }
  if (components.size() != counts.size()) {
    Fail(ErrorCode::kDimensionMismatch, "sample list count mismatch");
  }
  const Shape shape = components.front().shape();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].shape() != shape) {
      Fail(ErrorCode::kDimensionMismatch, "sample list entries differ in shape");
    }
    if (counts[i] == 0) {
      Fail(ErrorCode::kInvalidArgument, "sample list counts must be >= 1");
    }
    total += counts[i];
  }
  auto state = std::make_shared<State>();
  state->kind = SimulatorKind::kSampleList;
  state->shape = shape;
  state->components = std::move(components);
  state->counts = std::move(counts);
  state->total = total;
  return Simulator(std::move(state));
}

SimulatorKind Simulator::kind() const { return state_->kind; }
const Shape& Simulator::shape() const { return state_->shape; }

void Simulator::AccumulateInto(std::span<double> cond, double weight) const {
  const Shape& shape = state_->shape;
  const std::size_t width = shape.aux_size();
  switch (state_->kind) {
    case SimulatorKind::kTrueChannel: {
      const auto data = state_->channel->data();
      for (std::size_t c = 0; c < data.size(); ++c) cond[c] += weight * data[c];
      break;
    }
    case SimulatorKind::kTwoPointMix: {
      const TwoPointMix& tp = *state_->two_point;
      const double lo = weight * tp.gamma;
      const double hi = weight * (1.0 - tp.gamma);
      for (std::size_t x = 0; x < shape.domain_size; ++x) {
        cond[x * width + tp.h_minus[x]] += lo;
        cond[x * width + tp.h_plus[x]] += hi;
      }
      break;
    }
    case SimulatorKind::kWeightedMixture:
      for (std::size_t i = 0; i < state_->components.size(); ++i) {
        state_->components[i].AccumulateInto(cond, weight * state_->weights[i]);
      }
      break;
    case SimulatorKind::kSampleList: {
      const double inv = 1.0 / static_cast<double>(state_->total);
      for (std::size_t i = 0; i < state_->components.size(); ++i) {
        state_->components[i].AccumulateInto(
            cond, weight * (static_cast<double>(state_->counts[i]) * inv));
      }
      break;
    }
  }
}

Channel Simulator::Lower() const {
  if (state_->kind == SimulatorKind::kTrueChannel) return *state_->channel;
  std::vector<double> cond(state_->shape.cells(), 0.0);
  AccumulateInto(cond, 1.0);
  // Clear accumulated round-off so rows re-validate at 1e-12.
  const std::size_t width = state_->shape.aux_size();
  for (std::size_t x = 0; x < state_->shape.domain_size; ++x) {
    auto row = std::span<double>(cond).subspan(x * width, width);
    const double mass = StableSum(row);
    for (double& v : row) v = std::max(0.0, v / mass);
  }
  return Channel::Create(state_->shape, std::move(cond));
}

std::uint32_t Simulator::Sample(std::size_t x, Rng& rng) const {
  const Shape& shape = state_->shape;
  if (x >= shape.domain_size) {
    Fail(ErrorCode::kOutOfRange, "simulator input outside domain");
  }
  switch (state_->kind) {
    case SimulatorKind::kTrueChannel: {
      const auto row = state_->channel->row(x);
      double u = rng.Uniform01();
      for (std::size_t z = 0; z + 1 < row.size(); ++z) {
        if (u < row[z]) return static_cast<std::uint32_t>(z);
        u -= row[z];
      }
      return static_cast<std::uint32_t>(row.size() - 1);
    }
    case SimulatorKind::kTwoPointMix: {
      const TwoPointMix& tp = *state_->two_point;
      return rng.Uniform01() < tp.gamma ? tp.h_minus[x] : tp.h_plus[x];
    }
    case SimulatorKind::kWeightedMixture: {
      double u = rng.Uniform01();
      const auto& w = state_->weights;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (u < w[i]) return state_->components[i].Sample(x, rng);
        u -= w[i];
      }
      return state_->components.back().Sample(x, rng);
    }
    case SimulatorKind::kSampleList: {
      std::uint64_t pick = rng.UniformIndex(state_->total);
      for (std::size_t i = 0; i < state_->counts.size(); ++i) {
        if (pick < state_->counts[i]) return state_->components[i].Sample(x, rng);
        pick -= state_->counts[i];
      }
      return state_->components.back().Sample(x, rng);
    }
  }
  return 0;
}

const Channel* Simulator::channel() const {
  return state_->channel ? &*state_->channel : nullptr;
}
const TwoPointMix* Simulator::two_point() const {
  return state_->two_point ? &*state_->two_point : nullptr;
}
std::span<const Simulator> Simulator::components() const {
  return state_->components;
}
std::span<const double> Simulator::weights() const { return state_->weights; }
std::span<const std::uint64_t> Simulator::counts() const {
  return state_->counts;
}
std::uint64_t Simulator::sample_count() const { return state_->total; }

TwoPointMix BestResponseTable(std::span<const double> table,
                              const JointDistribution& target,
                              std::span<const double> px) {
  const Shape& shape = target.shape();
  if (table.size() != shape.cells() || px.size() != shape.domain_size) {
    Fail(ErrorCode::kDimensionMismatch,
         "best response operands do not share one shape");
  }
  const std::size_t width = shape.aux_size();
  TwoPointMix out;
  out.h_minus.resize(shape.domain_size);
  out.h_plus.resize(shape.domain_size);
  double e_minus = 0.0;
  double e_plus = 0.0;
  double e_target = 0.0;
  const double* p = target.data().data();
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    const double* row = table.data() + x * width;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    double row_target = 0.0;
    for (std::uint32_t z = 0; z < width; ++z) {
      if (row[z] < row[lo]) lo = z;
      if (row[z] > row[hi]) hi = z;
      row_target += p[x * width + z] * row[z];
    }
    out.h_minus[x] = lo;
    out.h_plus[x] = hi;
    e_minus += px[x] * row[lo];
    e_plus += px[x] * row[hi];
    e_target += row_target;
  }
  const double spread = e_plus - e_minus;
  out.gamma = spread > 0.0 ? std::clamp((e_plus - e_target) / spread, 0.0, 1.0)
                           : 1.0;
  return out;
}

TwoPointMix BestResponse(const Distinguisher& d,
                         const JointDistribution& target) {
  if (d.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch,
         "distinguisher and target differ in shape");
  }
  return BestResponseTable(d.Table(), target, MarginalX(target));
}

std::uint64_t GameRoundSchedule(std::size_t class_size, double eps_game) {
  CheckUnitInterval(eps_game, "eps_game");
  const double k2 = 2.0 * static_cast<double>(std::max<std::size_t>(class_size, 1));
  return CeilCount(4.0 * std::log(k2) / (eps_game * eps_game));
}

namespace {

// True when every member is d or its complement for a single d.
bool IsSingleDistinguisherGame(const DistinguisherClass& cls) {
  const auto first = cls[0].Table();
  for (const auto& d : cls.members()) {
    const auto t = d.Table();
    bool same = true;
    bool flipped = true;
    for (std::size_t c = 0; c < t.size() && (same || flipped); ++c) {
      same = same && std::abs(t[c] - first[c]) <= 1e-12;
      flipped = flipped && std::abs(t[c] + first[c] - 1.0) <= 1e-12;
    }
    if (!same && !flipped) return false;
  }
  return true;
}

}  // namespace

GameResult SolveGame(const DistinguisherClass& input,
                     const JointDistribution& target,
                     const GameOptions& options) {
  CheckUnitInterval(options.eps_game, "eps_game");
  if (input.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch, "class and target differ in shape");
  }
  const DistinguisherClass cls = input.ClosedUnderComplement();
  const Shape& shape = target.shape();
  const std::size_t num = cls.size();
  const std::size_t cells = shape.cells();
  const std::size_t width = shape.aux_size();
  const std::vector<double> px = MarginalX(target);
  const std::uint64_t schedule = GameRoundSchedule(num, options.eps_game);
  const std::uint64_t budget = std::max(options.max_rounds, schedule);

  Fnv1a digest;
  digest.Update(&options.seed, sizeof(options.seed));

  if (IsSingleDistinguisherGame(cls)) {
    TwoPointMix br = BestResponse(cls[0], target);
    const std::uint64_t h = HashTwoPoint(br);
    digest.Update(&h, sizeof(h));
    Simulator mix = Simulator::WeightedMixture(
        {Simulator::TwoPoint(shape, std::move(br))}, {1.0});
    const double achieved = MaxAdvantage(cls, target, mix.Lower()).value;
    if (achieved > options.eps_game) {
      Fail(ErrorCode::kNonConvergence, "single-distinguisher game above eps");
    }
    return GameResult{mix, 1, budget, achieved, Hex64(digest.value())};
  }

  std::vector<double> tables(num * cells);
  std::vector<double> target_mean(num);
  for (std::size_t i = 0; i < num; ++i) {
    const auto t = cls[i].Table();
    std::copy(t.begin(), t.end(), tables.begin() + i * cells);
    double e = 0.0;
    for (std::size_t c = 0; c < cells; ++c) e += target.data()[c] * t[c];
    target_mean[i] = e;
  }

  const double eta =
      std::sqrt(std::log(2.0 * static_cast<double>(num)) /
                static_cast<double>(schedule));
  std::vector<double> gains(num, 0.0);
  std::vector<double> weights(num);
  std::vector<double> mixture(cells);
  std::vector<TwoPointMix> responses;
  std::vector<std::uint64_t> counts;
  std::unordered_multimap<std::uint64_t, std::size_t> seen;

  auto average = [&](std::uint64_t rounds) {
    std::vector<Simulator> comps;
    std::vector<double> w;
    comps.reserve(responses.size());
    for (std::size_t j = 0; j < responses.size(); ++j) {
      comps.push_back(Simulator::TwoPoint(shape, responses[j]));
      w.push_back(static_cast<double>(counts[j]) / static_cast<double>(rounds));
    }
    return Simulator::WeightedMixture(std::move(comps), std::move(w));
  };

  for (std::uint64_t round = 1; round <= budget; ++round) {
    const double top = *std::max_element(gains.begin(), gains.end());
    double total = 0.0;
    for (std::size_t i = 0; i < num; ++i) {
      weights[i] = std::exp(eta * (gains[i] - top));
      total += weights[i];
    }
    for (double& w : weights) w /= total;
    digest.Update(weights.data(), num * sizeof(double));

    std::fill(mixture.begin(), mixture.end(), 0.0);
    for (std::size_t i = 0; i < num; ++i) {
      const double w = weights[i];
      const double* row = tables.data() + i * cells;
      for (std::size_t c = 0; c < cells; ++c) mixture[c] += w * row[c];
    }
    TwoPointMix br = BestResponseTable(mixture, target, px);

    const double g = br.gamma;
    for (std::size_t i = 0; i < num; ++i) {
      const double* row = tables.data() + i * cells;
      double e = 0.0;
      for (std::size_t x = 0; x < shape.domain_size; ++x) {
        const double* r = row + x * width;
        e += px[x] * (g * r[br.h_minus[x]] + (1.0 - g) * r[br.h_plus[x]]);
      }
      gains[i] += target_mean[i] - e;
    }

    const std::uint64_t key = HashTwoPoint(br);
    bool merged = false;
    for (auto [lo, hi] = seen.equal_range(key); lo != hi; ++lo) {
      if (responses[lo->second] == br) {
        ++counts[lo->second];
        merged = true;
        break;
      }
    }
    if (!merged) {
      seen.emplace(key, responses.size());
      responses.push_back(std::move(br));
      counts.push_back(1);
    }

    const double best =
        *std::max_element(gains.begin(), gains.end()) / static_cast<double>(round);
    if (best <= options.eps_game) {
      Simulator mix = average(round);
      const double achieved = MaxAdvantage(cls, target, mix.Lower()).value;
      if (achieved <= options.eps_game) {
        return GameResult{mix, round, budget, achieved, Hex64(digest.value())};
      }
    }
  }
  std::ostringstream msg;
  msg << "game did not reach eps_game = " << options.eps_game << " within "
      << budget << " rounds";
  Fail(ErrorCode::kNonConvergence, msg.str());
}

std::uint64_t SparsifySampleCount(int aux_bits, double eps) {
  CheckUnitInterval(eps, "eps");
  return CeilCount(std::ldexp(1.0, aux_bits) / (eps * eps));
}

Simulator DrawSampleList(const Simulator& mix, std::uint64_t t, Rng& rng) {
  if (t < 1) Fail(ErrorCode::kInvalidArgument, "t must be >= 1");
  if (mix.kind() != SimulatorKind::kWeightedMixture) {
    return Simulator::SampleList({mix}, {t});
  }
  const auto w = mix.weights();
  std::vector<double> cdf(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) cdf[i] = (acc += w[i]);
  std::vector<std::uint64_t> hits(w.size(), 0);
  for (std::uint64_t j = 0; j < t; ++j) {
    const double u = rng.Uniform01() * acc;
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++hits[std::min(i, w.size() - 1)];
  }
  std::vector<Simulator> comps;
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == 0) continue;
    comps.push_back(mix.components()[i]);
    counts.push_back(hits[i]);
  }
  return Simulator::SampleList(std::move(comps), std::move(counts));
}

SparsifyResult Sparsify(const Simulator& mix, std::uint64_t t,
                        const DistinguisherClass& cls,
                        const JointDistribution& target, double eps,
                        std::uint32_t max_retries, std::uint64_t seed) {
  if (t < 1) Fail(ErrorCode::kInvalidArgument, "t must be >= 1");
  if (!(eps >= 0.0)) Fail(ErrorCode::kInvalidArgument, "eps must be >= 0");
  if (mix.shape() != target.shape() || cls.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch, "sparsify operands differ in shape");
  }
  const double mix_adv = MaxAdvantage(cls, target, mix.Lower()).value;
  const Rng root(seed);
  double last = 0.0;
  for (std::uint32_t attempt = 0; attempt <= max_retries; ++attempt) {
    Rng rng = root.Split(attempt);
    Simulator list = DrawSampleList(mix, t, rng);
    const MaxAdvantageResult r = MaxAdvantage(cls, target, list.Lower());
    if (r.value <= mix_adv + eps) {
      return SparsifyResult{list, attempt, mix_adv, r.value, r.witness};
    }
    last = r.value;
  }
  std::ostringstream msg;
  msg << "no sample list of size " << t << " within " << eps
      << " of the mixture after " << max_retries << " retries (last "
      << last << ", mixture " << mix_adv << ")";
  Fail(ErrorCode::kSparsifyFailed, msg.str());
}

double L2ChannelGap(const Channel& a, const Channel& b,
                    std::span<const double> px) {
  if (a.shape() != b.shape() || px.size() != a.domain_size()) {
    Fail(ErrorCode::kDimensionMismatch, "l2 gap operands differ in shape");
  }
  const std::size_t width = a.aux_size();
  double total = 0.0;
  for (std::size_t x = 0; x < a.domain_size(); ++x) {
    double row = 0.0;
    for (std::size_t z = 0; z < width; ++z) {
      const double d = a.data()[x * width + z] - b.data()[x * width + z];
      row += d * d;
    }
    total += px[x] * row;
  }
  return total;
}

bool AdvantageL2BoundCheck(const Channel& a, const Channel& b,
                           std::span<const double> px,
                           const DistinguisherClass& cls,
                           const JointDistribution& target) {
  const double bound =
      std::sqrt(std::ldexp(1.0, a.aux_bits()) * L2ChannelGap(a, b, px));
  for (const auto& d : cls.members()) {
    const double gap = std::abs(TableAdvantage(d.Table(), target, px, a) -
                                TableAdvantage(d.Table(), target, px, b));
    if (gap > bound + 1e-12) return false;
  }
  return true;
}

SimulationResult SimulateFull(const JointDistribution& target,
                              const DistinguisherClass& input,
                              const SimulationOptions& options) {
  CheckUnitInterval(options.eps, "eps");
  if (input.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch, "class and target differ in shape");
  }
  const DistinguisherClass cls = input.ClosedUnderComplement();
  const double half = options.eps / 2.0;
  const Rng root(options.seed);

  GameResult game = SolveGame(
      cls, target, GameOptions{half, options.max_rounds, root.Split(0).seed()});
  const std::uint64_t t = SparsifySampleCount(target.aux_bits(), half);
  SparsifyResult sparse = Sparsify(game.mixture, t, cls, target, half,
                                   options.max_retries, root.Split(1).seed());

  const Channel lowered = sparse.sample_list.Lower();
  const MaxAdvantageResult check = MaxAdvantage(cls, target, lowered);
  if (check.value > options.eps) {
    Fail(ErrorCode::kInternal, "sparsified simulator exceeds eps");
  }
  const std::vector<double> px = MarginalX(target);
  if (!AdvantageL2BoundCheck(lowered, game.mixture.Lower(), px, cls, target)) {
    Fail(ErrorCode::kInternal, "advantage gap exceeds the L2 bound");
  }

  ComplexityReport report;
  const int m = target.aux_bits();
  const std::uint64_t width = std::uint64_t{1} << m;
  report.base_cost_s = cls.max_cost_s();
  report.t_used = t;
  report.idealized_calls = SaturatingMul(t, 2 * width);
  report.actual_calls = SaturatingMul(report.idealized_calls, cls.size());
  report.idealized_size = SaturatingMul(report.base_cost_s, report.idealized_calls);
  const double budget = 16.0 * static_cast<double>(report.base_cost_s) *
                        std::ldexp(1.0, 2 * m) / (options.eps * options.eps);
  report.budget_bound = budget >= 0x1.0p64
                            ? std::numeric_limits<std::uint64_t>::max()
                            : static_cast<std::uint64_t>(std::floor(budget));
  const bool all_boolean =
      std::all_of(cls.members().begin(), cls.members().end(),
                  [](const Distinguisher& d) { return d.IsBoolean(); });
  report.rho_used =
      all_boolean ? 0
                  : static_cast<int>(std::ceil(std::log2(1.0 / options.eps)));
  report.within_budget = report.idealized_size <= report.budget_bound;

  return SimulationResult{sparse.sample_list, report, std::move(game),
                          check.value, check.witness, sparse.retries_used};
}

}  // namespace auxsim

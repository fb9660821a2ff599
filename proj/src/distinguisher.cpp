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

#include "auxsim/distinguisher.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "auxsim/error.hpp"
#include "auxsim/parallel.hpp"

namespace auxsim {

struct Distinguisher::State {
  DistinguisherKind kind = DistinguisherKind::kRealTable;
  Shape shape;
  std::uint64_t cost_s = 1;
  std::vector<double> table;
  std::vector<Distinguisher> components;
  std::vector<double> weights;
  std::optional<Distinguisher> inner;
  std::optional<DigitDecomposition> decomposition;
};

namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr int kMaxRho = 52;

void CheckCost(std::uint64_t cost_s) {
  if (cost_s == 0) Fail(ErrorCode::kInvalidArgument, "cost_s must be >= 1");
}

void CheckTable(const Shape& shape, std::span<const double> table,
                bool boolean) {
  ValidateShape(shape);
  if (table.size() != shape.cells()) {
    Fail(ErrorCode::kDimensionMismatch,
         "distinguisher table has " + std::to_string(table.size()) +
             " entries, expected " + std::to_string(shape.cells()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double v = table[i];
    const bool ok = boolean ? (v == 0.0 || v == 1.0) : (v >= 0.0 && v <= 1.0);
    if (!ok) {
      std::ostringstream msg;
      msg << (boolean ? "boolean" : "real") << " table entry " << i
          << " out of range: " << v;
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
  }
}

bool IsComplementPair(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] + b[i] - 1.0) > 1e-12) return false;
  }
  return true;
}

// Bucket key on a 2^-30 grid. Near-boundary real values may land in
// different buckets, which only costs a redundant complement.
std::uint64_t TableKey(std::span<const double> t, bool complemented) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : t) {
    const double u = complemented ? 1.0 - v : v;
    h ^= static_cast<std::uint64_t>(std::llround(std::ldexp(u, 30)));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// present[i] is true when some member is the complement of members[i].
std::vector<bool> ComplementPresent(std::span<const Distinguisher> members) {
  std::unordered_multimap<std::uint64_t, std::size_t> by_key;
  by_key.reserve(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    by_key.emplace(TableKey(members[j].Table(), false), j);
  }
  std::vector<bool> present(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto t = members[i].Table();
    auto [lo, hi] = by_key.equal_range(TableKey(t, true));
    for (auto it = lo; it != hi; ++it) {
      if (IsComplementPair(t, members[it->second].Table())) {
        present[i] = true;
        break;
      }
    }
  }
  return present;
}

}  // namespace

Distinguisher Distinguisher::BooleanTable(Shape shape,
                                          std::vector<double> table,
                                          std::uint64_t cost_s) {
  CheckTable(shape, table, /*boolean=*/true);
  CheckCost(cost_s);
  auto state = std::make_shared<State>();
  state->kind = DistinguisherKind::kBooleanTable;
  state->shape = shape;
  state->cost_s = cost_s;
  state->table = std::move(table);
  return Distinguisher(std::move(state));
}

Distinguisher Distinguisher::RealTable(Shape shape, std::vector<double> table,
                                       std::uint64_t cost_s) {
  CheckTable(shape, table, /*boolean=*/false);
  CheckCost(cost_s);
  auto state = std::make_shared<State>();
  state->kind = DistinguisherKind::kRealTable;
  state->shape = shape;
  state->cost_s = cost_s;
  state->table = std::move(table);
  return Distinguisher(std::move(state));
}

Distinguisher Distinguisher::Constant(Shape shape, double value,
                                      std::uint64_t cost_s) {
  ValidateShape(shape);
  return RealTable(shape, std::vector<double>(shape.cells(), value), cost_s);
}

Distinguisher Distinguisher::Mixture(std::vector<Distinguisher> components,
                                     std::vector<double> weights) {
  if (components.empty()) {
    Fail(ErrorCode::kInvalidArgument, "mixture needs at least one component");
  }
  if (components.size() != weights.size()) {
    Fail(ErrorCode::kDimensionMismatch,
         "mixture has " + std::to_string(components.size()) +
             " components but " + std::to_string(weights.size()) + " weights");
  }
  const Shape shape = components.front().shape();
  std::uint64_t cost = 0;
  for (const auto& c : components) {
    if (c.shape() != shape) {
      Fail(ErrorCode::kDimensionMismatch, "mixture components differ in shape");
    }
    cost = std::max(cost, c.cost_s());
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
  state->kind = DistinguisherKind::kMixture;
  state->shape = shape;
  state->cost_s = cost;
  state->table.assign(shape.cells(), 0.0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto t = components[i].Table();
    for (std::size_t c = 0; c < t.size(); ++c) {
      state->table[c] += weights[i] * t[c];
    }
  }
  for (double& v : state->table) v = std::clamp(v, 0.0, 1.0);
  state->components = std::move(components);
  state->weights = std::move(weights);
  return Distinguisher(std::move(state));
}

Distinguisher Distinguisher::Complement(const Distinguisher& inner) {
  auto state = std::make_shared<State>();
  state->kind = DistinguisherKind::kComplement;
  state->shape = inner.shape();
  state->cost_s = inner.cost_s();
  const auto t = inner.Table();
  state->table.resize(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) state->table[c] = 1.0 - t[c];
  state->inner = inner;
  return Distinguisher(std::move(state));
}

Distinguisher Distinguisher::DigitDecoder(DigitDecomposition decomposition,
                                          std::uint64_t source_cost_s) {
  CheckCost(source_cost_s);
  ValidateShape(decomposition.shape);
  if (decomposition.rho < 1 ||
      decomposition.digits.size() != static_cast<std::size_t>(decomposition.rho)) {
    Fail(ErrorCode::kInvalidArgument, "malformed digit decomposition");
  }
  auto state = std::make_shared<State>();
  state->kind = DistinguisherKind::kDigitDecoder;
  state->shape = decomposition.shape;
  state->cost_s = source_cost_s + 2 * static_cast<std::uint64_t>(decomposition.rho);
  state->table.resize(decomposition.shape.cells());
  const std::size_t width = decomposition.shape.aux_size();
  for (std::size_t c = 0; c < state->table.size(); ++c) {
    state->table[c] = DigitDecoderExpectation(
        decomposition, c / width, static_cast<std::uint32_t>(c % width));
  }
  state->decomposition = std::move(decomposition);
  return Distinguisher(std::move(state));
}

DistinguisherKind Distinguisher::kind() const { return state_->kind; }
const Shape& Distinguisher::shape() const { return state_->shape; }
std::uint64_t Distinguisher::cost_s() const { return state_->cost_s; }

double Distinguisher::Evaluate(std::size_t x, std::uint32_t z) const {
  const Shape& shape = state_->shape;
  if (x >= shape.domain_size || z >= shape.aux_size()) {
    std::ostringstream msg;
    msg << "evaluate(" << x << ", " << z << ") outside " << shape.domain_size
        << " x " << shape.aux_size() << " grid";
    Fail(ErrorCode::kOutOfRange, msg.str());
  }
  if (state_->kind == DistinguisherKind::kComplement) {
    return 1.0 - state_->inner->Evaluate(x, z);
  }
  return state_->table[shape.index(x, z)];
}

std::span<const double> Distinguisher::Table() const { return state_->table; }

bool Distinguisher::IsBoolean() const {
  return std::all_of(state_->table.begin(), state_->table.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

std::span<const Distinguisher> Distinguisher::components() const {
  return state_->components;
}
std::span<const double> Distinguisher::weights() const {
  return state_->weights;
}
const Distinguisher* Distinguisher::inner() const {
  return state_->inner ? &*state_->inner : nullptr;
}
const DigitDecomposition* Distinguisher::decomposition() const {
  return state_->decomposition ? &*state_->decomposition : nullptr;
}

DistinguisherClass DistinguisherClass::Create(
    std::vector<Distinguisher> members, bool close_under_complement) {
  if (members.empty()) {
    Fail(ErrorCode::kInvalidArgument, "distinguisher class is empty");
  }
  const Shape shape = members.front().shape();
  for (const auto& d : members) {
    if (d.shape() != shape) {
      Fail(ErrorCode::kDimensionMismatch, "class members differ in shape");
    }
  }
  if (close_under_complement) {
    const std::vector<bool> present = ComplementPresent(members);
    const std::size_t original = members.size();
    for (std::size_t i = 0; i < original; ++i) {
      if (!present[i]) members.push_back(Distinguisher::Complement(members[i]));
    }
  }
  return DistinguisherClass(shape, std::move(members), close_under_complement);
}

std::uint64_t DistinguisherClass::max_cost_s() const {
  std::uint64_t cost = 0;
  for (const auto& d : members_) cost = std::max(cost, d.cost_s());
  return cost;
}

DistinguisherClass DistinguisherClass::ClosedUnderComplement() const {
  if (closed_) return *this;
  return Create(members_, /*close_under_complement=*/true);
}

bool DistinguisherClass::VerifyComplementClosure() const {
  const std::vector<bool> present = ComplementPresent(members_);
  return std::all_of(present.begin(), present.end(), [](bool b) { return b; });
}

DistinguisherClass AllBooleanTables(Shape shape, std::uint64_t cost_s) {
  ValidateShape(shape);
  const std::size_t cells = shape.cells();
  if (cells > 16) {
    Fail(ErrorCode::kInvalidArgument,
         "exhaustive boolean class needs N * 2^m <= 16");
  }
  std::vector<Distinguisher> members;
  members.reserve(std::size_t{1} << cells);
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    std::vector<double> table(cells);
    for (std::size_t c = 0; c < cells; ++c) table[c] = (mask >> c) & 1u;
    members.push_back(Distinguisher::BooleanTable(shape, std::move(table), cost_s));
  }
  // Complements are already present: mask ^ (2^cells - 1).
  return DistinguisherClass::Create(std::move(members), true);
}

DistinguisherClass RandomBooleanTables(Shape shape, std::size_t count,
                                       std::uint64_t seed,
                                       std::uint64_t cost_s) {
  ValidateShape(shape);
  Rng rng(seed);
  std::vector<Distinguisher> members;
  members.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> table(shape.cells());
    for (double& v : table) v = rng.Coin() ? 1.0 : 0.0;
    members.push_back(Distinguisher::BooleanTable(shape, std::move(table), cost_s));
  }
  return DistinguisherClass::Create(std::move(members), false);
}

DistinguisherClass RandomRealTables(Shape shape, std::size_t count,
                                    std::uint64_t seed, std::uint64_t cost_s) {
  ValidateShape(shape);
  Rng rng(seed);
  std::vector<Distinguisher> members;
  members.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> table(shape.cells());
    for (double& v : table) v = rng.Uniform01();
    members.push_back(Distinguisher::RealTable(shape, std::move(table), cost_s));
  }
  return DistinguisherClass::Create(std::move(members), false);
}

double TableAdvantage(std::span<const double> table,
                      const JointDistribution& target,
                      std::span<const double> px, const Channel& sim) {
  const Shape& shape = target.shape();
  if (sim.shape() != shape || table.size() != shape.cells() ||
      px.size() != shape.domain_size) {
    Fail(ErrorCode::kDimensionMismatch,
         "advantage operands do not share one (N, m) shape");
  }
  const std::size_t width = shape.aux_size();
  const double* p = target.data().data();
  const double* q = sim.data().data();
  // Each row of p - px q sums to zero, so values are taken relative to the
  // row's first entry; constant rows then contribute exactly nothing.
  double total = 0.0;
  for (std::size_t x = 0; x < shape.domain_size; ++x) {
    const std::size_t base = x * width;
    const double pivot = table[base];
    double row = 0.0;
    for (std::size_t z = 1; z < width; ++z) {
      row += (table[base + z] - pivot) * (p[base + z] - px[x] * q[base + z]);
    }
    total += row;
  }
  return total;
}

double Advantage(const Distinguisher& d, const JointDistribution& target,
                 const Channel& sim) {
  if (d.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch,
         "distinguisher and target differ in shape");
  }
  if (d.kind() == DistinguisherKind::kComplement) {
    return -Advantage(*d.inner(), target, sim);
  }
  const auto px = MarginalX(target);
  return TableAdvantage(d.Table(), target, px, sim);
}

MaxAdvantageResult MaxAdvantage(const DistinguisherClass& cls,
                                const JointDistribution& target,
                                const Channel& sim) {
  if (cls.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch, "class and target differ in shape");
  }
  if (sim.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch, "simulator and target differ in shape");
  }
  const auto px = MarginalX(target);
  std::vector<double> values(cls.size());
  auto one = [&](std::size_t i) {
    values[i] = std::abs(TableAdvantage(cls[i].Table(), target, px, sim));
  };
  if (WorkerThreads() > 1 && cls.size() * target.shape().cells() >= (1u << 16)) {
    ParallelFor(cls.size(), one);
  } else {
    for (std::size_t i = 0; i < cls.size(); ++i) one(i);
  }
  MaxAdvantageResult best{-1.0, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > best.value) best = {values[i], i};
  }
  return best;
}

AdvantageEstimate EstimateAdvantage(const Distinguisher& d,
                                    const JointDistribution& target,
                                    const Channel& sim, std::size_t draws,
                                    std::uint64_t seed) {
  if (draws < 1) Fail(ErrorCode::kInvalidArgument, "draws must be >= 1");
  if (d.shape() != target.shape() || sim.shape() != target.shape()) {
    Fail(ErrorCode::kDimensionMismatch,
         "advantage operands do not share one (N, m) shape");
  }
  const Rng root(seed);
  Sampler real(target, root.Split(0).seed());
  Sampler simulated(Compose(MarginalX(target), sim), root.Split(1).seed());
  // Welford accumulation of the per-draw differences.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto [x, z] = real.Next();
    const auto [xs, zs] = simulated.Next();
    const double diff = d.Evaluate(x, z) - d.Evaluate(xs, zs);
    const double delta = diff - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (diff - mean);
  }
  AdvantageEstimate out;
  out.estimate = mean;
  if (draws > 1) {
    const double var = m2 / static_cast<double>(draws - 1);
    out.std_error = std::sqrt(var / static_cast<double>(draws));
  }
  return out;
}

DigitDecomposition DigitDecompose(const Distinguisher& d, int rho) {
  if (rho < 1 || rho > kMaxRho) {
    Fail(ErrorCode::kInvalidArgument,
         "rho must be in [1, " + std::to_string(kMaxRho) + "]");
  }
  DigitDecomposition out;
  out.shape = d.shape();
  out.rho = rho;
  out.digits.assign(rho, std::vector<std::uint8_t>(d.shape().cells(), 0));
  const std::uint64_t top = (std::uint64_t{1} << rho) - 1;
  const auto table = d.Table();
  for (std::size_t c = 0; c < table.size(); ++c) {
    const double scaled = std::floor(std::ldexp(table[c], rho));
    const std::uint64_t v =
        std::min(static_cast<std::uint64_t>(scaled), top);
    for (int i = 1; i <= rho; ++i) {
      out.digits[i - 1][c] = static_cast<std::uint8_t>((v >> (rho - i)) & 1u);
    }
  }
  return out;
}

double DigitDecoderExpectation(const DigitDecomposition& dec, std::size_t x,
                               std::uint32_t z) {
  if (x >= dec.shape.domain_size || z >= dec.shape.aux_size()) {
    Fail(ErrorCode::kOutOfRange, "decoder evaluated outside its grid");
  }
  const std::size_t cell = dec.shape.index(x, z);
  double value = 0.0;
  for (int i = 1; i <= dec.rho; ++i) {
    if (dec.digits[i - 1][cell]) value += std::ldexp(1.0, -i);
  }
  return value;
}

int RunDigitDecoder(const DigitDecomposition& dec, std::size_t x,
                    std::uint32_t z, Rng& rng) {
  const std::size_t cell = dec.shape.index(x, z);
  for (int i = 1; i <= dec.rho; ++i) {
    if (rng.Coin()) return dec.digits[i - 1][cell];
  }
  return 0;
}

}  // namespace auxsim

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

#ifndef AUXSIM_DISTINGUISHER_HPP_
#define AUXSIM_DISTINGUISHER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "auxsim/distribution.hpp"

namespace auxsim {

enum class DistinguisherKind {
  kBooleanTable,
  kRealTable,
  kMixture,
  kComplement,
  kDigitDecoder,
};

// First rho binary digits of a [0,1]-valued table, truncated.
// digits[i][cell] is the (i+1)-th digit after the binary point.
struct DigitDecomposition {
  Shape shape;
  int rho = 0;
  std::vector<std::vector<std::uint8_t>> digits;
};

// A [0,1]-valued test function on the (x, z) grid with a declared size.
// Cheap to copy: state is shared and immutable.
class Distinguisher {
 public:
  static Distinguisher BooleanTable(Shape shape, std::vector<double> table,
                                    std::uint64_t cost_s = 1);
  static Distinguisher RealTable(Shape shape, std::vector<double> table,
                                 std::uint64_t cost_s = 1);
  static Distinguisher Constant(Shape shape, double value,
                                std::uint64_t cost_s = 1);
  // Cost is the largest component cost.
  static Distinguisher Mixture(std::vector<Distinguisher> components,
                               std::vector<double> weights);
  static Distinguisher Complement(const Distinguisher& inner);
  // Cost is the source cost plus 2 * rho for the coin-toss decoder.
  static Distinguisher DigitDecoder(DigitDecomposition decomposition,
                                    std::uint64_t source_cost_s);

  DistinguisherKind kind() const;
  const Shape& shape() const;
  std::uint64_t cost_s() const;

  // Throws kOutOfRange for x >= N or z >= 2^m.
  double Evaluate(std::size_t x, std::uint32_t z) const;

  // Dense values over the full grid, row-major [x][z]. Computed once.
  std::span<const double> Table() const;

  // True when every value is exactly 0 or 1.
  bool IsBoolean() const;

  std::span<const Distinguisher> components() const;
  std::span<const double> weights() const;
  const Distinguisher* inner() const;
  const DigitDecomposition* decomposition() const;

 private:
  struct State;
  explicit Distinguisher(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  std::shared_ptr<const State> state_;
};

// Finite set of distinguishers over a common shape.
class DistinguisherClass {
 public:
  // When close_under_complement is set, missing complements (checked by
  // pointwise comparison of tables) are appended in member order.
  static DistinguisherClass Create(std::vector<Distinguisher> members,
                                   bool close_under_complement);

  std::span<const Distinguisher> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Distinguisher& operator[](std::size_t i) const { return members_[i]; }
  const Shape& shape() const { return shape_; }
  bool closed_under_complement() const { return closed_; }
  std::uint64_t max_cost_s() const;

  // Returns this class if already closed, otherwise the closure.
  DistinguisherClass ClosedUnderComplement() const;

  // Pointwise check that every member's complement is present.
  bool VerifyComplementClosure() const;

 private:
  DistinguisherClass(Shape shape, std::vector<Distinguisher> members,
                     bool closed)
      : shape_(shape), members_(std::move(members)), closed_(closed) {}

  Shape shape_;
  std::vector<Distinguisher> members_;
  bool closed_ = false;
};

// Test-suite generators. AllBooleanTables requires N * 2^m <= 16.
DistinguisherClass AllBooleanTables(Shape shape, std::uint64_t cost_s = 1);
DistinguisherClass RandomBooleanTables(Shape shape, std::size_t count,
                                       std::uint64_t seed,
                                       std::uint64_t cost_s = 1);
DistinguisherClass RandomRealTables(Shape shape, std::size_t count,
                                    std::uint64_t seed,
                                    std::uint64_t cost_s = 1);

// Signed advantage E d(X, Z) - E d(X, h(X)) where h has output law `sim`.
double Advantage(const Distinguisher& d, const JointDistribution& target,
                 const Channel& sim);

// Same, on a raw table; px is the x-marginal of target.
double TableAdvantage(std::span<const double> table,
                      const JointDistribution& target,
                      std::span<const double> px, const Channel& sim);

struct MaxAdvantageResult {
  double value = 0.0;  // max_i |advantage_i|
  std::size_t witness = 0;
};

// Ties resolve to the lowest member index.
MaxAdvantageResult MaxAdvantage(const DistinguisherClass& cls,
                                const JointDistribution& target,
                                const Channel& sim);

struct AdvantageEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Monte-Carlo estimate from `draws` paired samples (x, z) ~ target and
// (x', z') ~ (X, h(X)).
AdvantageEstimate EstimateAdvantage(const Distinguisher& d,
                                    const JointDistribution& target,
                                    const Channel& sim, std::size_t draws,
                                    std::uint64_t seed);

DigitDecomposition DigitDecompose(const Distinguisher& d, int rho);

// Exact output expectation sum_i 2^-i D^(i)(x, z) of the coin-toss decoder.
double DigitDecoderExpectation(const DigitDecomposition& dec, std::size_t x,
                               std::uint32_t z);

// One run of the coin-toss decoder: in round i a fair coin either halts with
// output D^(i)(x, z) or moves on; after round rho the output is 0.
int RunDigitDecoder(const DigitDecomposition& dec, std::size_t x,
                    std::uint32_t z, Rng& rng);

}  // namespace auxsim

#endif  // AUXSIM_DISTINGUISHER_HPP_

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

#ifndef AUXSIM_SECURITY_HPP_
#define AUXSIM_SECURITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace auxsim::security {

// Simulator results the cipher analysis can be instantiated with.
enum class Method { kPJ14, kVZ13, kOurs, kDream };

const char* MethodName(Method method);
// Accepts "pj14", "vz13", "ours", "dream" (case-insensitive).
Method ParseMethod(std::string_view name);
// 2^(beta * ell) exponent of the simulator loss: 3, 2, 1. None for VZ13.
std::optional<int> MethodBeta(Method method);

// Inputs of the cipher strength formula. ell is the leakage per round, q the
// number of blocks, c1 the constant in eps' = c1 q 2^(ell/2) eps_F^(1/2) and
// c2 the constant in the simulator loss c2 2^(beta ell) eps^-2 log^theta.
struct CipherSecuritySpec {
  double k = 512;
  double ell = 0;
  double q = 16;
  int beta = 2;
  double theta = 0;
  double c1 = 4;
  double c2 = 1;
};

struct SecurityReport {
  Method method = Method::kOurs;
  double lambda_bits = 0.0;
  std::optional<double> eps_prime_floor_log2;
  std::vector<std::string> notes;
};

// Solves W * 2^W = u for u > 0. Throws kDomainError for u <= 0.
double LambertW2(double u);
// Same with u = 2^log2_u, for arguments beyond double range.
double LambertW2FromLog2(double log2_u);

// k - (beta+1) ell - 2 log q - 2 log c1 - log c2; throws
// kInfeasibleParameters unless positive.
double EffectiveKeyBits(const CipherSecuritySpec& spec);

// Closed-form bits of security (time-to-success ratio) at the adversary's
// optimum, accurate to one bit.
double SecurityBits(const CipherSecuritySpec& spec);
// Exact optimum via LambertW2. Coincides with SecurityBits when theta = 0.
double SecurityBitsExact(const CipherSecuritySpec& spec);

// log2 of the smallest meaningful eps' for the stream cipher, per
// simulator method. Throws kUnsupportedMethod for kDream.
double EpsPrimeFloorLog2(double k, double ell, double q, Method method);

// k/6 - ell/2: the most the VZ13-based analysis can certify.
double VzSecurityCap(double k, double ell);

// Largest integer ell >= 0 with SecurityBits >= lambda_target.
int MaxLeakage(double k, double q, double lambda_target, int beta,
               double theta = 0, double c1 = 4, double c2 = 1);

// log2 of the simulator cost with unit constants:
//   PJ14 s 2^3l / e^2, VZ13 s 2^l / e^2 + 2^l / e^4, OURS s 2^2l / e^2,
//   DREAM s 2^l / e^2.
double SimulatorCostLog2(Method method, double log2_s, double ell,
                         double log2_eps);
// Human-readable cost formula for the comparison table.
std::string SimulatorCostFormula(Method method);

struct CipherParams {
  double eps_prime_log2 = 0.0;
  // -infinity when no positive s' exists.
  double s_prime_log2 = 0.0;
  std::vector<std::string> notes;
};

// eps' = 4 q sqrt(eps_F 2^ell) and the resulting s' for the method's
// simulator, everything in log2.
CipherParams StreamCipherParams(double log2_eps_F, double log2_s_F, double q,
                                double ell, Method method);

// eps_F that minimizes s'/eps' subject to s' >= 1 with s_F / eps_F = 2^k
// (theta = 0).
double OptimalEpsFLog2(const CipherSecuritySpec& spec);

SecurityReport MakeSecurityReport(Method method, const CipherSecuritySpec& spec);

struct CostRow {
  Method method;
  std::string advantage;
  std::string size;
  std::string cost_formula;
  double example_cost_log2;
};

struct CipherRow {
  Method method;
  double q;
  int ell;
  std::string lambda;  // "80", or "<80" for the VZ13 row
  std::optional<double> computed_cap;
  std::optional<double> computed_eps_floor_log2;
  std::string footnote;
};

struct Tables {
  // Example point for the numeric cost column.
  double example_log2_s = 10;
  double example_ell = 8;
  double example_log2_eps = -10;
  std::vector<CostRow> cost_rows;
  double k = 512;
  double q = 16;
  double lambda_target = 80;
  std::vector<CipherRow> cipher_rows;
};

Tables MakeTables();
std::string RenderTablesMarkdown(const Tables& tables);
std::string RenderTablesCsv(const Tables& tables);
std::string RenderTablesJson(const Tables& tables);

}  // namespace auxsim::security

#endif  // AUXSIM_SECURITY_HPP_

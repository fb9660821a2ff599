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

#ifndef AUXSIM_TOOLS_CLI_HPP_
#define AUXSIM_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace auxsim_cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitBadInput = 2,
  kExitNonConvergence = 3,
};

struct RunConfig {
  std::string subcommand;
  std::string instance_path;
  std::string class_path;
  std::string simulator_path;
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 0;
  std::uint32_t max_retries = 32;
  std::string method = "ours";
  std::string format;  // empty: json, or md for tables
  std::string out_path;  // empty: stdout
  double k = 512;
  double ell = 0;
  double q = 16;
  double lambda = 80;
  double theta = 0;
  double c1 = 4;
  double c2 = 1;
};

int RunSimulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int RunVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int RunSecurity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int RunLeakage(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int RunTables(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv, applies AUXSIM_THREADS and dispatches.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace auxsim_cli

#endif  // AUXSIM_TOOLS_CLI_HPP_

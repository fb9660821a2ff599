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

#ifndef AUXSIM_IO_HPP_
#define AUXSIM_IO_HPP_

#include <string>
#include <string_view>

#include "auxsim/distinguisher.hpp"
#include "auxsim/distribution.hpp"
#include "auxsim/security.hpp"
#include "auxsim/simulator.hpp"

// JSON interchange formats. Parsers throw Error with kParseError for
// malformed documents and the validation code of the domain type otherwise.
namespace auxsim::io {

inline constexpr double kFileMassTolerance = 1e-9;

// {"domain_size": N, "aux_bits": m, "prob": [[...], ...]}, row-major [x][z].
// Mass within 1e-9 of 1 is accepted and renormalized.
JointDistribution ParseInstance(std::string_view json);
std::string InstanceToJson(const JointDistribution& dist);

// {"members": [{"kind": "boolean_table"|"real_table", "table": [[...]],
//   "cost_s": s}, ...], "close_under_complement": bool}
DistinguisherClass ParseClass(std::string_view json);
std::string ClassToJson(const DistinguisherClass& cls);

// {"kind": "sample_list", "domain_size": N, "aux_bits": m,
//  "components": [{"kind": "two_point", "h_minus": [...], "h_plus": [...],
//                  "gamma": g, "count": c}, ...],
//  "channel": [[...]]}
// Also accepts kinds "two_point", "weighted_mixture" (with "weights") and
// "true_channel" (channel only). A present "channel" block must match the
// lowered components within 1e-9.
Simulator ParseSimulator(std::string_view json);
std::string SimulatorToJson(const Simulator& sim);

// Simulator document extended with "complexity", "game" and "verification"
// blocks; ParseSimulator reads it back.
std::string SimulationToJson(const SimulationResult& result);

std::string SecurityReportToJson(const security::SecurityReport& report);
std::string SecurityReportToMarkdown(const security::SecurityReport& report);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace auxsim::io

#endif  // AUXSIM_IO_HPP_

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

#ifndef AUXSIM_ERROR_HPP_
#define AUXSIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace auxsim {

// Mirrors auxsim_status in the C API; values are part of the ABI.
enum class ErrorCode {
  kOk = 0,
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kOutOfRange = 3,
  kParseError = 4,
  kNonConvergence = 5,
  kSparsifyFailed = 6,
  kInfeasibleParameters = 7,
  kUnsupportedMethod = 8,
  kDomainError = 9,
  kIoError = 10,
  kInternal = 11,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace auxsim

#endif  // AUXSIM_ERROR_HPP_

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

#ifndef AUXSIM_PARALLEL_HPP_
#define AUXSIM_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace auxsim {

// Worker cap for member-parallel loops; 1 (the default) runs serially.
void SetWorkerThreads(unsigned count);
unsigned WorkerThreads();

// Runs body(i) for i in [0, n) on up to WorkerThreads() threads. Callers
// write results to per-index slots and reduce serially, so output does not
// depend on the thread count.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace auxsim

#endif  // AUXSIM_PARALLEL_HPP_

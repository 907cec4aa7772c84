// Copyright 2026 The revcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Index-parallel loop over a fixed worker count taken from REVCOVER_THREADS
// (default: hardware concurrency).

#ifndef REVCOVER_PARALLEL_H_
#define REVCOVER_PARALLEL_H_

#include <functional>

namespace revcover {

int ThreadCount();

// Calls fn(i) for every i in [0, n). Results must be written by index so
// the outcome does not depend on scheduling. The exception thrown by the
// lowest failing index is rethrown after all workers finish.
void ParallelFor(int n, const std::function<void(int)>& fn);

}  // namespace revcover

#endif  // REVCOVER_PARALLEL_H_

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

// Comparison assigners over the original PC. Both respect lambda, conflicts
// and upper loads only.

#ifndef REVCOVER_BASELINES_H_
#define REVCOVER_BASELINES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "revcover/model.h"

namespace revcover {

enum class BaselineKind { kGreedy, kIterativeWorstOff };

std::string_view ToString(BaselineKind kind);
std::optional<BaselineKind> ParseBaselineKind(std::string_view s);

class BaselineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Papers in input order; each takes its lambda most similar PC reviewers
// with capacity left. `mu_upper` is indexed like instance.pc().
Assignment GreedyAssign(const ConferenceInstance& instance,
                        std::span<const int> mu_upper);

struct WorstOffTrace {
  // Summed f of each fixed set, in fixing order.
  std::vector<double> fixed_sums;
};

// Repeatedly builds `merges` randomised candidate assignments for the
// unfixed papers (plus the previous best, restricted to them), keeps the
// one with the highest fairness and fixes its worst-off paper.
Assignment IterativeWorstOff(const ConferenceInstance& instance,
                             std::span<const int> mu_upper, int merges,
                             uint64_t seed, WorstOffTrace* trace = nullptr);

}  // namespace revcover

#endif  // REVCOVER_BASELINES_H_

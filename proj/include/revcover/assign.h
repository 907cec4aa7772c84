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

// Reviewer assignment step: finds a diverse, independent, conflict-free
// assignment, optionally maximising the summed transformed similarity J.
//
// The diversity network decides feasibility of the relaxation and supplies
// the cut when it fails. Integral assignments come from a depth-first
// search over the reviewer -> paper assignment flow (integral by
// construction): a set missing an attribute branches on its most similar
// candidate carrying it (force / forbid), and a dependent pair branches on
// forbidding either member for that paper, lower similarity first. With
// costs enabled the flow value bounds the search; without them the
// relaxation's flow steers which pairs the integral flow picks.
//
// Every node first adds the fixes its own fixes imply: sole candidates for
// a required attribute, sets or loads with no slack, and dependents of
// forced members.

#ifndef REVCOVER_ASSIGN_H_
#define REVCOVER_ASSIGN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revcover/model.h"
#include "revcover/network.h"

namespace revcover {

struct SubroutineConfig {
  // Min-cost search for maximal J instead of the first feasible assignment.
  bool optimize_similarity = true;
  // Dependency branchings allowed per paper along one search path.
  int dependency_repair_retries = 10;
  // Relaxation solves before the search stops with its best answer.
  int max_nodes = 4000;
  // Nodes without a better incumbent before the search gives up improving.
  int stall_nodes = 100;
};

struct SubResult {
  bool feasible = false;
  Assignment assignment;
  // J of the returned assignment.
  double objective = 0.0;
  // Sum of round(f(S_ij) * 1e4) over assigned pairs: the integer objective
  // the search maximises.
  int64_t scaled_objective = 0;
  // True when the search ran to completion: the assignment is optimal (or
  // the first feasible one, without optimisation) and infeasibility is
  // proven. False when the node budget or dependency budget cut it short.
  bool complete = false;
  bool repair_fired = false;
  int nodes = 0;
  // Papers attributed with the failure on infeasibility.
  std::vector<std::string> blamed_papers;
  std::string reason;
};

// Solves the assignment step over `pairs`. Bounds are pool-indexed.
SubResult SolveAssignment(const ConferenceInstance& instance,
                          const PairSet& pairs, std::span<const int> mu_lower,
                          std::span<const int> mu_upper,
                          const SubroutineConfig& config);

// Whether some lambda-subset of `candidates` containing all of `forced` is
// diverse and free of dependent pairs.
bool HasValidReviewerSet(const ConferenceInstance& instance,
                         std::span<const int> candidates,
                         std::span<const int> forced);

}  // namespace revcover

#endif  // REVCOVER_ASSIGN_H_

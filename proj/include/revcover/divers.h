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

// Main routine: makes the PC able to cover every in-scope submission,
// extending it from the ERC where needed, then keeps the most diverse of
// several randomised assignments.
//
//   1. preflight    insert ERC members until capacity, senior, industry
//                   and academia capacity each cover the submissions
//   2. theta        drop submissions no reviewer reaches with S >= theta
//   3. loop         while the assignment step fails: rank problem papers,
//                   insert up to kappa ERC members fitting them, drop
//                   papers that cannot get lambda candidates at all
//   4. tries        solve once undropped and `tries` times with a random
//                   share of pairs removed; keep the highest Div (then J)

#ifndef REVCOVER_DIVERS_H_
#define REVCOVER_DIVERS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revcover/assign.h"
#include "revcover/model.h"

namespace revcover {

struct MainConfig {
  double theta = 0.0;
  int kappa = 10;
  int tries = 25;
  double drop_pct = 0.1;
  int sample_runs = 20;
  double sample_drop_pct = 0.1;
  bool restrictive = false;
  uint64_t seed = 0;
  // Replaces every reviewer's mu_upper when set.
  std::optional<int> mu_upper;
  // Score bonus per scarce attribute an ERC candidate carries.
  double diversity_bonus = 0.1;
  int max_iterations = 100;
  SubroutineConfig sub;
  // Node budget of the failure-sampling solves.
  int sample_max_nodes = 200;
};

// Throws std::invalid_argument when a field is out of range.
void ValidateMainConfig(const MainConfig& config);

class DiversError : public std::runtime_error {
 public:
  DiversError(const std::string& message,
              std::vector<std::string> blamed_papers = {})
      : std::runtime_error(message), blamed_papers_(std::move(blamed_papers)) {}
  const std::vector<std::string>& blamed_papers() const {
    return blamed_papers_;
  }

 private:
  std::vector<std::string> blamed_papers_;
};

struct Suggestion {
  std::string reviewer_id;
  double score = 0.0;
  std::string explanation;
  std::vector<std::string> example_submission_ids;
  int iteration = 0;  // 0: preflight
};

struct ProblemPaper {
  std::string submission_id;
  double failure_probability = 0.0;
  int eligible_reviewers = 0;
};

struct RoutineOutput {
  Assignment assignment;
  // Inserted reviewers that carry assignments, best first.
  std::vector<Suggestion> suggestions;
  // Every insertion, in insertion order.
  std::vector<Suggestion> insertions;
  std::vector<std::string> out_of_scope_papers;
  std::vector<std::string> unused_pc;
  // The input instance with the suggested reviewers tagged as inserted.
  ConferenceInstance instance;
  int iterations = 0;
  int feasible_tries = 0;
  // False when the restrictive lower bounds could not be met and the
  // assignment was computed without them.
  bool restrictive_satisfied = true;
  double div = 0.0;
};

// Pool indices of the active reviewers and the submissions in scope.
struct Scope {
  std::vector<bool> active;
  std::vector<int> papers;
};

bool Eligible(const ConferenceInstance& instance, int pool, int paper,
              double theta);

// Inserts ERC members until total, senior, industry-capable and
// academia-capable capacity of the active reviewers each reach the number
// of submissions. Throws DiversError when the ERC runs out.
std::vector<Suggestion> PreflightExtend(const ConferenceInstance& instance,
                                        Scope& scope,
                                        const std::vector<int>& mu_upper);

// Restricts the scope to submissions some PC or ERC reviewer reaches with
// similarity >= theta and deactivates reviewers whose lower bound exceeds
// their eligible papers. Returns the out-of-scope submission ids; throws
// DiversError when nothing remains.
std::vector<std::string> ApplyTheta(const ConferenceInstance& instance,
                                    Scope& scope,
                                    const std::vector<int>& mu_lower,
                                    double theta);

// Papers with fewer than lambda eligible active reviewers first
// (probability 1, fewest eligible first), then papers that failed in
// sampled assignment runs, by failure rate. Papers that never failed are
// omitted.
std::vector<ProblemPaper> IdentifyProblemPapers(
    const ConferenceInstance& instance, const Scope& scope,
    const std::vector<int>& mu_upper, const MainConfig& config,
    uint64_t stream);

// Up to kappa inactive ERC members eligible for at least one target paper,
// by mean similarity to the targets plus the scarcity bonus.
std::vector<Suggestion> ExtendPc(const ConferenceInstance& instance,
                                 Scope& scope, const std::vector<int>& mu_upper,
                                 const std::vector<int>& targets,
                                 const MainConfig& config, int iteration);

RoutineOutput Run(const ConferenceInstance& instance, const MainConfig& config);

// Seed of the index-th stream derived from a base seed.
uint64_t StreamSeed(uint64_t seed, uint64_t stream, uint64_t index);

}  // namespace revcover

#endif  // REVCOVER_DIVERS_H_

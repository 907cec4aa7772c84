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

// Assignment quality measures. Averages over papers run over the sets
// present in the assignment.

#ifndef REVCOVER_METRICS_H_
#define REVCOVER_METRICS_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revcover/model.h"
#include "revcover/textsim.h"

namespace revcover {

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum over papers of the summed f(S_ij) of its reviewers.
double Fairness(const Assignment& assignment,
                const ConferenceInstance& instance);

// J: summed f(S_ij) over every assigned pair.
double TotalSimilarity(const Assignment& assignment,
                       const ConferenceInstance& instance);

// Per paper, mean symmetrised KL over unordered reviewer pairs; averaged
// over papers. Profiles are keyed by reviewer id.
double AvgTextualDiversity(const Assignment& assignment,
                           const std::map<std::string, TermCounts>& profiles);
// Same, with profiles built from the reviewers' profile texts.
double AvgTextualDiversity(const Assignment& assignment,
                           const ConferenceInstance& instance);

struct SetDiversity {
  double background = 0.0;
  double location = 0.0;
  double seniority = 0.0;
  double total() const { return background + location + seniority; }
};

// Components for one reviewer set. Throws MetricError for fewer than two
// members.
SetDiversity ScoreSet(std::span<const Reviewer* const> members);

double Diversity(const Assignment& assignment,
                 const ConferenceInstance& instance);

// Percentage of reviewer sets holding a dependent pair.
double DependencyPct(const Assignment& assignment,
                     const ConferenceInstance& instance);

struct WorkloadStats {
  double mean_per_used_reviewer = 0.0;
  // Total assignments over the final PC: PC members, inserted reviewers
  // and any other reviewer carrying an assignment.
  double mean_per_pc_member = 0.0;
  // Original PC members without assignments.
  int unused_pc = 0;
};

WorkloadStats Workload(const Assignment& assignment,
                       const ConferenceInstance& instance);

struct AssignmentReport {
  double mean_workload_per_used_reviewer = 0.0;
  double mean_workload_per_pc_member = 0.0;
  int unused_pc_count = 0;
  double fairness = 0.0;
  double avg_kl = 0.0;
  double div = 0.0;
  double dep_pct = 0.0;
  double J = 0.0;
};

AssignmentReport Evaluate(const Assignment& assignment,
                          const ConferenceInstance& instance);

// NDCG with linear gains and log2 discount. All-zero relevance scores 0
// with a warning; an empty list throws MetricError.
double Ndcg(std::span<const double> relevance);

}  // namespace revcover

#endif  // REVCOVER_METRICS_H_

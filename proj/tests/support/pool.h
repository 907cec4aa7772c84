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


// Pool-indexed helpers for driving the assignment step directly.

#ifndef REVCOVER_TESTS_POOL_H_
#define REVCOVER_TESTS_POOL_H_

#include <numeric>
#include <vector>

#include "revcover/model.h"
#include "revcover/network.h"

namespace revcover::testing {

inline std::vector<int> UpperBounds(const ConferenceInstance& instance) {
  std::vector<int> mu(instance.pool_size());
  for (int k = 0; k < instance.pool_size(); ++k) {
    mu[k] = instance.reviewer(k).mu_upper;
  }
  return mu;
}

inline std::vector<int> Zeros(const ConferenceInstance& instance) {
  return std::vector<int>(instance.pool_size(), 0);
}

// Every PC member against every submission.
inline PairSet PcPairs(const ConferenceInstance& instance, double theta = 0.0) {
  std::vector<int> reviewers(instance.pc().size());
  std::iota(reviewers.begin(), reviewers.end(), 0);
  std::vector<int> papers(instance.num_submissions());
  std::iota(papers.begin(), papers.end(), 0);
  return MakePairSet(instance, reviewers, papers, theta);
}

}  // namespace revcover::testing

#endif  // REVCOVER_TESTS_POOL_H_

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


// Small hand-built instances shared by the unit and acceptance tests.

#ifndef REVCOVER_TESTS_FIXTURES_H_
#define REVCOVER_TESTS_FIXTURES_H_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "revcover/model.h"

namespace revcover::testing {

inline Reviewer MakeReviewer(std::string id, Background background,
                             std::initializer_list<Continent> locations,
                             Seniority seniority, int mu_upper = 3) {
  Reviewer r;
  r.id = id;
  r.name = id;
  r.background = background;
  r.locations = ContinentSet(locations);
  r.seniority = seniority;
  r.mu_upper = mu_upper;
  r.profile_text = "profile of " + id;
  return r;
}

// `n_papers` submissions m0, m1, ... with every similarity set to `sim`.
inline ConferenceInstance MakeInstance(
    int lambda, int n_papers, std::vector<Reviewer> pc, double sim = 0.5,
    const std::vector<std::pair<int, int>>& deps = {},
    std::vector<Reviewer> erc = {}) {
  std::vector<Submission> subs;
  for (int j = 0; j < n_papers; ++j) {
    subs.push_back({"m" + std::to_string(j), "submission text " +
                                                 std::to_string(j),
                    {"author-" + std::to_string(j)}});
  }
  const int n_pc = static_cast<int>(pc.size());
  const int n_erc = static_cast<int>(erc.size());
  DependencyMatrix dep(n_pc + n_erc);
  for (auto [a, b] : deps) dep.Add(a, b);
  return ConferenceInstance(lambda, std::move(subs), std::move(pc),
                            std::move(erc),
                            SimilarityMatrix(n_pc, n_papers, sim),
                            SimilarityMatrix(n_erc, n_papers, sim),
                            std::move(dep));
}

// Three reviewers that jointly satisfy every set rule.
inline std::vector<Reviewer> DiverseTrio(int mu_upper = 3) {
  return {MakeReviewer("i", Background::kBoth, {Continent::kEurope},
                       Seniority::kSenior, mu_upper),
          MakeReviewer("k", Background::kAcademia, {Continent::kAsia},
                       Seniority::kSenior, mu_upper),
          MakeReviewer("r", Background::kIndustry, {Continent::kNorthAmerica},
                       Seniority::kJunior, mu_upper)};
}

// The two-reviewer example of the diversity measure: i (both, senior) and
// k (academia, senior) on different continents, independent.
inline ConferenceInstance WorkedExample() {
  std::vector<Reviewer> pc = {
      MakeReviewer("i", Background::kBoth, {Continent::kEurope},
                   Seniority::kSenior),
      MakeReviewer("k", Background::kAcademia, {Continent::kAsia},
                   Seniority::kSenior)};
  return MakeInstance(2, 1, std::move(pc));
}

inline Assignment MakeAssignment(
    int lambda,
    std::initializer_list<std::pair<std::string, std::vector<std::string>>>
        sets) {
  Assignment a;
  a.lambda = lambda;
  for (const auto& [paper, members] : sets) a.sets[paper] = members;
  return a;
}

}  // namespace revcover::testing

#endif  // REVCOVER_TESTS_FIXTURES_H_

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


#include "revcover/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.h"
#include "oracles.h"
#include "revcover/textsim.h"

namespace revcover {
namespace {

using testing::DiverseTrio;
using testing::MakeAssignment;
using testing::MakeInstance;
using testing::MakeReviewer;

TEST(Diversity, WorkedExample) {
  const ConferenceInstance inst = testing::WorkedExample();
  const Assignment a = MakeAssignment(2, {{"m0", {"i", "k"}}});
  EXPECT_NEAR(Diversity(a, inst), 11.0 / 6.0, 1e-12);
  EXPECT_EQ(DependencyPct(a, inst), 0.0);
}

TEST(Diversity, Extremes) {
  std::vector<Reviewer> same;
  for (const char* id : {"a", "b", "c"}) {
    same.push_back(MakeReviewer(id, Background::kIndustry, {Continent::kAsia},
                                Seniority::kSenior));
  }
  const Assignment a = MakeAssignment(3, {{"m0", {"a", "b", "c"}}});
  EXPECT_NEAR(Diversity(a, MakeInstance(3, 1, same)), 1.0 / 3.0, 1e-12);

  std::vector<Reviewer> spread = {
      MakeReviewer("a", Background::kBoth, {Continent::kAsia}, Seniority::kSenior),
      MakeReviewer("b", Background::kBoth, {Continent::kEurope},
                   Seniority::kAdvanced),
      MakeReviewer("c", Background::kBoth, {Continent::kAfrica},
                   Seniority::kJunior)};
  EXPECT_NEAR(Diversity(a, MakeInstance(3, 1, spread)), 3.0, 1e-12);
}

TEST(ScoreSet, JaccardOverlap) {
  const Reviewer a = MakeReviewer("a", Background::kAcademia,
                                  {Continent::kAsia, Continent::kEurope},
                                  Seniority::kSenior);
  const Reviewer b = MakeReviewer("b", Background::kIndustry,
                                  {Continent::kEurope}, Seniority::kSenior);
  const std::vector<const Reviewer*> members = {&a, &b};
  const SetDiversity d = ScoreSet(members);
  EXPECT_NEAR(d.background, 1.0, 1e-12);
  EXPECT_NEAR(d.location, 0.5, 1e-12);
  EXPECT_NEAR(d.seniority, 1.0 / 3.0, 1e-12);
  const std::vector<const Reviewer*> one = {&a};
  EXPECT_THROW(ScoreSet(one), MetricError);
}

TEST(DependencyPct, OneOfTwoSets) {
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kSenior));
  const ConferenceInstance inst = MakeInstance(3, 2, pc, 0.5, {{0, 1}});
  const Assignment a =
      MakeAssignment(3, {{"m0", {"i", "k", "r"}}, {"m1", {"i", "r", "z"}}});
  EXPECT_EQ(DependencyPct(a, inst), 50.0);
}

TEST(Fairness, SumsAndMinimum) {
  const ConferenceInstance inst = MakeInstance(3, 1, DiverseTrio(), 0.5);
  const Assignment a = MakeAssignment(3, {{"m0", {"i", "k", "r"}}});
  EXPECT_EQ(Fairness(a, inst), 6.0);
  EXPECT_EQ(TotalSimilarity(a, inst), 6.0);
  EXPECT_THROW(Fairness(Assignment{}, inst), MetricError);

  ConferenceInstance two = MakeInstance(3, 2, DiverseTrio(), 0.5);
  SimilarityMatrix sim = two.sim_pc();
  for (int i = 0; i < 3; ++i) sim.Set(i, 1, 1.0 / 3.0);  // f = 1.5
  const ConferenceInstance skew(3, two.submissions(), two.pc(), two.erc(), sim,
                                two.sim_erc(), two.dep());
  const Assignment b =
      MakeAssignment(3, {{"m0", {"i", "k", "r"}}, {"m1", {"i", "k", "r"}}});
  EXPECT_NEAR(Fairness(b, skew), 4.5, 1e-12);
}

TEST(Fairness, MatchesDirectLoop) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 0.99);
  for (int round = 0; round < 50; ++round) {
    ConferenceInstance base = MakeInstance(3, 4, DiverseTrio(4));
    SimilarityMatrix sim = base.sim_pc();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) sim.Set(i, j, u(rng));
    }
    const ConferenceInstance inst(3, base.submissions(), base.pc(), base.erc(),
                                  sim, base.sim_erc(), base.dep());
    Assignment a;
    a.lambda = 3;
    for (int j = 0; j < 4; ++j) a.sets["m" + std::to_string(j)] = {"i", "k", "r"};
    EXPECT_EQ(Fairness(a, inst), oracle::FairnessByLoop(a, inst));
  }
}

TEST(Workload, UsedAndUnused) {
  std::vector<Reviewer> pc = {
      MakeReviewer("a", Background::kBoth, {Continent::kAsia}, Seniority::kSenior),
      MakeReviewer("b", Background::kBoth, {Continent::kAsia}, Seniority::kSenior)};
  const ConferenceInstance inst = MakeInstance(1, 3, pc);
  const Assignment a =
      MakeAssignment(1, {{"m0", {"a"}}, {"m1", {"a"}}, {"m2", {"a"}}});
  const WorkloadStats w = Workload(a, inst);
  EXPECT_EQ(w.mean_per_used_reviewer, 3.0);
  EXPECT_EQ(w.mean_per_pc_member, 1.5);
  EXPECT_EQ(w.unused_pc, 1);
}

TEST(Workload, InsertedReviewersNotCountedAsUnused) {
  std::vector<Reviewer> pc = {MakeReviewer("a", Background::kBoth,
                                           {Continent::kAsia}, Seniority::kSenior)};
  std::vector<Reviewer> erc = {MakeReviewer("e", Background::kBoth,
                                            {Continent::kAsia}, Seniority::kSenior),
                               MakeReviewer("f", Background::kBoth,
                                            {Continent::kAsia}, Seniority::kSenior)};
  erc[0].origin = Origin::kInserted;
  const ConferenceInstance inst = MakeInstance(1, 2, pc, 0.5, {}, erc);
  const Assignment a = MakeAssignment(1, {{"m0", {"a"}}, {"m1", {"a"}}});
  const WorkloadStats w = Workload(a, inst);
  EXPECT_EQ(w.unused_pc, 0);
  EXPECT_EQ(w.mean_per_pc_member, 1.0);  // a and the inserted e
}

TEST(AvgTextualDiversity, SharedModelIsZero) {
  std::vector<Reviewer> pc = DiverseTrio();
  for (Reviewer& r : pc) r.profile_text = "same words here";
  const ConferenceInstance inst = MakeInstance(3, 1, pc);
  EXPECT_EQ(AvgTextualDiversity(MakeAssignment(3, {{"m0", {"i", "k", "r"}}}), inst),
            0.0);
}

TEST(AvgTextualDiversity, TwoReviewersHandComputed) {
  // xx xx xx yy vs xx yy yy yy: add-one gives (4/6, 2/6) and (2/6, 4/6).
  std::map<std::string, TermCounts> profiles = {
      {"i", TermCounts::FromText("xx xx xx yy")},
      {"k", TermCounts::FromText("xx yy yy yy")}};
  const Assignment a = MakeAssignment(2, {{"m0", {"i", "k"}}});
  const double kl = oracle::TwoTermKl(4.0 / 6.0, 2.0 / 6.0);
  EXPECT_NEAR(AvgTextualDiversity(a, profiles), kl, 1e-12);
  const Assignment swapped = MakeAssignment(2, {{"m0", {"k", "i"}}});
  EXPECT_NEAR(AvgTextualDiversity(swapped, profiles), kl, 1e-12);
}

TEST(AvgTextualDiversity, SingleReviewerSetsAreZero) {
  std::map<std::string, TermCounts> profiles = {
      {"i", TermCounts::FromText("xx")}};
  EXPECT_EQ(AvgTextualDiversity(MakeAssignment(1, {{"m0", {"i"}}}), profiles),
            0.0);
}

TEST(Ndcg, Values) {
  const std::vector<double> ideal = {3, 2, 1};
  EXPECT_DOUBLE_EQ(Ndcg(ideal), 1.0);
  const std::vector<double> reversed = {1, 2, 3};
  EXPECT_NEAR(Ndcg(reversed), oracle::Dcg(reversed) / oracle::Dcg(ideal), 1e-12);
  const std::vector<double> single = {2};
  EXPECT_DOUBLE_EQ(Ndcg(single), 1.0);
  const std::vector<double> zeros = {0, 0};
  EXPECT_EQ(Ndcg(zeros), 0.0);
  EXPECT_THROW(Ndcg(std::vector<double>{}), MetricError);
}

TEST(Evaluate, CollectsEveryColumn) {
  const ConferenceInstance inst = MakeInstance(3, 1, DiverseTrio(), 0.5);
  const AssignmentReport r =
      Evaluate(MakeAssignment(3, {{"m0", {"i", "k", "r"}}}), inst);
  EXPECT_EQ(r.J, 6.0);
  EXPECT_EQ(r.fairness, 6.0);
  EXPECT_EQ(r.dep_pct, 0.0);
  EXPECT_EQ(r.unused_pc_count, 0);
  EXPECT_GE(r.div, 0.0);
  EXPECT_LE(r.div, 3.0);
}

}  // namespace
}  // namespace revcover

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


#include "revcover/assign.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.h"
#include "oracles.h"
#include "pool.h"
#include "revcover/datagen.h"
#include "revcover/metrics.h"

namespace revcover {
namespace {

using testing::DiverseTrio;
using testing::MakeInstance;
using testing::MakeReviewer;
using testing::PcPairs;
using testing::UpperBounds;
using testing::Zeros;

SubroutineConfig Exhaustive(bool optimize = true) {
  SubroutineConfig c;
  c.optimize_similarity = optimize;
  c.max_nodes = 1'000'000;
  c.stall_nodes = 1'000'000;
  return c;
}

SubResult Solve(const ConferenceInstance& inst, const SubroutineConfig& c) {
  return SolveAssignment(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst), c);
}

TEST(SolveAssignment, ForcedTrio) {
  const ConferenceInstance inst = MakeInstance(3, 1, DiverseTrio(), 0.5);
  const SubResult r = Solve(inst, Exhaustive());
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.objective, 6.0);
  EXPECT_EQ(r.scaled_objective, 60000);
  EXPECT_EQ(r.assignment.sets.at("m0").size(), 3u);
}

TEST(SolveAssignment, CapacityShortfall) {
  std::vector<Reviewer> pc = DiverseTrio(1);
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kSenior, 1));
  const SubResult r = Solve(MakeInstance(3, 2, pc), Exhaustive());
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.complete);
  EXPECT_FALSE(r.reason.empty());
}

TEST(SolveAssignment, BlamesPaperWithoutSenior) {
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kJunior));
  ConferenceInstance base = MakeInstance(3, 2, pc);
  SimilarityMatrix sim = base.sim_pc();
  sim.Set(0, 1, SimilarityMatrix::kConflict);  // paper m1 loses both seniors
  sim.Set(1, 1, SimilarityMatrix::kConflict);
  const ConferenceInstance inst(3, base.submissions(), base.pc(), base.erc(),
                                sim, base.sim_erc(), base.dep());
  const SubResult r = Solve(inst, Exhaustive());
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.blamed_papers, (std::vector<std::string>{"m1"}));
}

TEST(SolveAssignment, DependencyBranchFindsIndependentSet) {
  // Two seniors that depend on each other and carry the highest similarity.
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kAdvanced));
  ConferenceInstance base = MakeInstance(3, 1, pc, 0.2, {{0, 1}});
  SimilarityMatrix sim = base.sim_pc();
  sim.Set(0, 0, 0.9);
  sim.Set(1, 0, 0.8);
  const ConferenceInstance inst(3, base.submissions(), base.pc(), base.erc(),
                                sim, base.sim_erc(), base.dep());
  const SubResult r = Solve(inst, Exhaustive());
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(r.repair_fired);
  EXPECT_EQ(DependencyPct(r.assignment, inst), 0.0);
  EXPECT_TRUE(IsFeasible(r.assignment, inst, false, 0.0).feasible);
  const auto brute =
      oracle::BestAssignment(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst));
  EXPECT_EQ(r.scaled_objective, brute.scaled);
}

TEST(SolveAssignment, DependencyBudgetExhaustion) {
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kAdvanced));
  const ConferenceInstance inst = MakeInstance(3, 1, pc, 0.5, {{0, 1}, {0, 2}});
  SubroutineConfig c = Exhaustive();
  c.dependency_repair_retries = 0;
  const SubResult r = Solve(inst, c);
  if (!r.feasible) {
    EXPECT_FALSE(r.complete);
    EXPECT_TRUE(r.repair_fired);
  }
}

TEST(SolveAssignment, LowerBoundsHonoured) {
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kBoth, {Continent::kAfrica},
                            Seniority::kSenior));
  const ConferenceInstance inst = MakeInstance(3, 1, pc, 0.5);
  std::vector<int> lower = Zeros(inst);
  lower[3] = 1;
  const SubResult r = SolveAssignment(inst, PcPairs(inst), lower,
                                      UpperBounds(inst), Exhaustive());
  ASSERT_TRUE(r.feasible);
  const auto& set = r.assignment.sets.at("m0");
  EXPECT_NE(std::find(set.begin(), set.end(), "z"), set.end());
}

class OracleSweep : public ::testing::TestWithParam<uint64_t> {};

TEST_P(OracleSweep, MatchesEnumeration) {
  GenConfig cfg = Preset("tiny-oracle");
  cfg.seed = GetParam();
  cfg.n_papers = 2 + GetParam() % 3;
  cfg.n_pc = 6 + GetParam() % 3;
  const ConferenceInstance inst = Generate(cfg).instance;
  const auto brute =
      oracle::BestAssignment(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst));
  for (bool optimize : {true, false}) {
    const SubResult r = Solve(inst, Exhaustive(optimize));
    ASSERT_TRUE(r.complete);
    ASSERT_EQ(r.feasible, brute.feasible) << "optimize " << optimize;
    if (!r.feasible) continue;
    EXPECT_TRUE(IsFeasible(r.assignment, inst, false, 0.0).feasible);
    EXPECT_NEAR(TotalSimilarity(r.assignment, inst), r.objective,
                1e-9 * r.objective);
    if (optimize) {
      EXPECT_EQ(r.scaled_objective, brute.scaled);
      EXPECT_NEAR(r.objective, brute.J, 1e-9 * brute.J);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(TinyInstances, OracleSweep,
                         ::testing::Range<uint64_t>(1000, 1040));

TEST(SolveAssignment, AddingPairsKeepsFeasibility) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    GenConfig cfg = Preset("tiny-oracle");
    cfg.seed = seed;
    const ConferenceInstance inst = Generate(cfg).instance;
    PairSet all = PcPairs(inst);
    PairSet fewer = all;
    fewer.allowed.erase(fewer.allowed.begin() + seed % fewer.allowed.size());
    const SubResult small = SolveAssignment(inst, fewer, Zeros(inst),
                                            UpperBounds(inst), Exhaustive());
    const SubResult big = SolveAssignment(inst, all, Zeros(inst),
                                          UpperBounds(inst), Exhaustive());
    if (small.feasible) {
      EXPECT_TRUE(big.feasible) << "seed " << seed;
      EXPECT_GE(big.scaled_objective, small.scaled_objective);
    }
  }
}

TEST(SolveAssignment, NodeBudgetNeverProvesInfeasibility) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg = Preset("tiny-oracle");
    cfg.n_papers = 4;
    cfg.seed = seed;
    const ConferenceInstance inst = Generate(cfg).instance;
    if (!Solve(inst, Exhaustive()).feasible) continue;
    SubroutineConfig c;
    c.max_nodes = 1;
    const SubResult r = Solve(inst, c);
    EXPECT_LE(r.nodes, 1);
    EXPECT_TRUE(r.feasible || !r.complete) << "seed " << seed;
  }
}

TEST(HasValidReviewerSet, ForcedMembersMustFit) {
  std::vector<Reviewer> pc = DiverseTrio();
  pc.push_back(MakeReviewer("z", Background::kIndustry, {Continent::kEurope},
                            Seniority::kJunior));
  const ConferenceInstance inst = MakeInstance(3, 1, pc, 0.5, {{0, 1}});
  const std::vector<int> all = {0, 1, 2, 3};
  EXPECT_FALSE(HasValidReviewerSet(inst, all, std::vector<int>{0, 1}));
  EXPECT_FALSE(HasValidReviewerSet(inst, all, std::vector<int>{0, 2, 3, 1}));
  // {i, r, z} works without k.
  EXPECT_TRUE(HasValidReviewerSet(inst, all, std::vector<int>{0}));
  EXPECT_FALSE(HasValidReviewerSet(inst, std::vector<int>{2, 3},
                                   std::vector<int>{}));
}

}  // namespace
}  // namespace revcover

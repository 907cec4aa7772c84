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


#include "revcover/baselines.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "pool.h"
#include "revcover/datagen.h"
#include "revcover/metrics.h"

namespace revcover {
namespace {

using testing::MakeInstance;
using testing::MakeReviewer;

std::vector<int> PcUpper(const ConferenceInstance& inst) {
  std::vector<int> mu;
  for (const Reviewer& r : inst.pc()) mu.push_back(r.mu_upper);
  return mu;
}

ConferenceInstance FourReviewers() {
  std::vector<Reviewer> pc;
  for (const char* id : {"a", "b", "c", "d"}) {
    pc.push_back(MakeReviewer(id, Background::kBoth, {Continent::kAsia},
                              Seniority::kSenior));
  }
  ConferenceInstance base = MakeInstance(3, 1, pc);
  SimilarityMatrix sim = base.sim_pc();
  sim.Set(0, 0, 0.9);
  sim.Set(1, 0, 0.8);
  sim.Set(2, 0, 0.7);
  sim.Set(3, 0, 0.1);
  return ConferenceInstance(3, base.submissions(), base.pc(), base.erc(), sim,
                            base.sim_erc(), base.dep());
}

TEST(GreedyAssign, TakesTopThree) {
  const ConferenceInstance inst = FourReviewers();
  const Assignment a = GreedyAssign(inst, PcUpper(inst));
  EXPECT_EQ(a.sets.at("m0"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(a.provenance, "greedy");
}

TEST(GreedyAssign, NeverPicksConflict) {
  const ConferenceInstance base = FourReviewers();
  SimilarityMatrix sim = base.sim_pc();
  sim.Set(0, 0, SimilarityMatrix::kConflict);
  const ConferenceInstance inst(3, base.submissions(), base.pc(), base.erc(),
                                sim, base.sim_erc(), base.dep());
  const Assignment a = GreedyAssign(inst, PcUpper(inst));
  EXPECT_EQ(a.sets.at("m0"), (std::vector<std::string>{"b", "c", "d"}));
}

TEST(GreedyAssign, CapacityExhausted) {
  const ConferenceInstance inst = FourReviewers();
  EXPECT_THROW(GreedyAssign(inst, std::vector<int>{1, 1, 0, 0}), BaselineError);
}

TEST(IterativeWorstOff, SinglePaperMatchesGreedy) {
  const ConferenceInstance inst = FourReviewers();
  EXPECT_EQ(IterativeWorstOff(inst, PcUpper(inst), 10, 1).sets,
            GreedyAssign(inst, PcUpper(inst)).sets);
}

TEST(Baselines, RespectCapacityAndMayViolateDependencies) {
  int dependent_runs = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.n_papers = 12;
    cfg.n_pc = 10;
    cfg.n_erc = 0;
    cfg.dep_rate = 0.3;
    cfg.seed = seed;
    const ConferenceInstance inst = Generate(cfg).instance;
    const std::vector<int> mu = PcUpper(inst);
    for (const Assignment& a :
         {GreedyAssign(inst, mu), IterativeWorstOff(inst, mu, 5, seed)}) {
      FeasibilityOptions opts;
      opts.check_diversity = false;
      opts.check_dependencies = false;
      EXPECT_TRUE(IsFeasible(a, inst, opts).feasible);
      dependent_runs += DependencyPct(a, inst) > 0.0;
    }
  }
  EXPECT_GT(dependent_runs, 0);
}

TEST(IterativeWorstOff, FixedSumsNeverDecrease) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.n_papers = 10;
    cfg.n_pc = 8;
    cfg.n_erc = 0;
    cfg.seed = seed;
    const ConferenceInstance inst = Generate(cfg).instance;
    WorstOffTrace trace;
    IterativeWorstOff(inst, PcUpper(inst), 4, seed, &trace);
    ASSERT_EQ(trace.fixed_sums.size(), 10u);
    for (size_t i = 1; i < trace.fixed_sums.size(); ++i) {
      EXPECT_GE(trace.fixed_sums[i] + 1e-9, trace.fixed_sums[i - 1])
          << "seed " << seed << " step " << i;
    }
  }
}

TEST(GreedyAssign, NeverBeatsUnconstrainedOptimum) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    GenConfig cfg = Preset("tiny-oracle");
    cfg.seed = seed;
    const ConferenceInstance inst = Generate(cfg).instance;
    Assignment greedy;
    try {
      greedy = GreedyAssign(inst, PcUpper(inst));
    } catch (const BaselineError&) {
      continue;
    }
    const auto best = oracle::BestAssignment(inst, testing::PcPairs(inst),
                                             testing::Zeros(inst),
                                             testing::UpperBounds(inst), false);
    ASSERT_TRUE(best.feasible);
    EXPECT_LE(TotalSimilarity(greedy, inst), best.J * (1 + 1e-12));
  }
}

TEST(BaselineKind, Names) {
  EXPECT_EQ(ParseBaselineKind("greedy"), BaselineKind::kGreedy);
  EXPECT_EQ(ParseBaselineKind(ToString(BaselineKind::kIterativeWorstOff)),
            BaselineKind::kIterativeWorstOff);
  EXPECT_FALSE(ParseBaselineKind("pr4all").has_value());
}

}  // namespace
}  // namespace revcover

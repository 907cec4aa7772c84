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


#include "revcover/network.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "pool.h"
#include "revcover/datagen.h"
#include "revcover/textsim.h"

namespace revcover {
namespace {

using testing::DiverseTrio;
using testing::MakeInstance;
using testing::PcPairs;
using testing::UpperBounds;
using testing::Zeros;

FlowOutcome SolveSixLayer(const ConferenceInstance& inst, BuiltNetwork* out) {
  *out = BuildNetwork(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst), false);
  return FeasibleFlow(out->network);
}

TEST(BuildNetwork, LayoutShape) {
  const ConferenceInstance inst = MakeInstance(3, 2, DiverseTrio());
  const BuiltNetwork b =
      BuildNetwork(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst), true);
  EXPECT_EQ(b.layout.papers.size(), 2u);
  EXPECT_EQ(b.layout.decisions.size(), 6u);
  EXPECT_EQ(b.layout.diversity_nodes.size(), 2u);
  EXPECT_EQ(b.layout.scale, 21);
  EXPECT_EQ(b.network.demand(), 21 * 3 * 2);
  for (const DecisionNode& d : b.layout.decisions) {
    EXPECT_EQ(b.network.edge(d.edge).capacity, 21);
  }
}

TEST(BuildNetwork, UniqueDiverseSet) {
  const ConferenceInstance inst = MakeInstance(3, 1, DiverseTrio());
  BuiltNetwork b;
  const FlowOutcome out = SolveSixLayer(inst, &b);
  ASSERT_TRUE(IsFeasible(out));
  const Assignment a = ExtractAssignment(std::get<FlowResult>(out), b.layout, inst);
  std::vector<std::string> members = a.sets.at("m0");
  std::sort(members.begin(), members.end());
  EXPECT_EQ(members, (std::vector<std::string>{"i", "k", "r"}));
}

TEST(BuildNetwork, AllJuniorIsInfeasible) {
  std::vector<Reviewer> pc = DiverseTrio();
  for (Reviewer& r : pc) r.seniority = Seniority::kJunior;
  BuiltNetwork b;
  EXPECT_FALSE(IsFeasible(SolveSixLayer(MakeInstance(3, 1, pc), &b)));
}

TEST(BuildNetwork, AllIndustryIsInfeasible) {
  std::vector<Reviewer> pc = DiverseTrio();
  for (Reviewer& r : pc) r.background = Background::kIndustry;
  BuiltNetwork b;
  EXPECT_FALSE(IsFeasible(SolveSixLayer(MakeInstance(3, 1, pc), &b)));
}

TEST(BuildNetwork, SharedContinentIsInfeasible) {
  std::vector<Reviewer> pc = DiverseTrio();
  for (Reviewer& r : pc) r.locations.Insert(Continent::kOceania);
  BuiltNetwork b;
  EXPECT_FALSE(IsFeasible(SolveSixLayer(MakeInstance(3, 1, pc), &b)));
}

TEST(DecisionUnitCost, ScaledNegatedTransform) {
  EXPECT_EQ(DecisionUnitCost(0.5), -20000);
  EXPECT_EQ(DecisionUnitCost(0.0), -10000);
  EXPECT_EQ(DecisionUnitCost(1.0), -10000000000LL);
}

TEST(MakePairSet, ExcludesConflictsAndLowSimilarity) {
  ConferenceInstance base = MakeInstance(3, 2, DiverseTrio(), 0.3);
  SimilarityMatrix sim = base.sim_pc();
  sim.Set(0, 0, SimilarityMatrix::kConflict);
  sim.Set(1, 1, 0.1);
  const ConferenceInstance inst(3, base.submissions(), base.pc(), base.erc(),
                                sim, base.sim_erc(), base.dep());
  const PairSet pairs = PcPairs(inst, 0.2);
  EXPECT_FALSE(pairs.Contains({0, 0}));
  EXPECT_FALSE(pairs.Contains({1, 1}));
  EXPECT_TRUE(pairs.Contains({0, 1}));
  EXPECT_EQ(pairs.allowed.size(), 4u);
}

TEST(ExtractAssignment, RejectsPartialFlow) {
  const ConferenceInstance inst = MakeInstance(3, 1, DiverseTrio());
  const BuiltNetwork b =
      BuildNetwork(inst, PcPairs(inst), Zeros(inst), UpperBounds(inst), false);
  FlowResult fake;
  fake.flow.assign(b.network.num_edges(), 0);
  fake.flow[b.layout.decisions[0].edge] = 7;
  EXPECT_THROW(ExtractAssignment(fake, b.layout, inst), std::logic_error);
}

// The network is a relaxation: whenever some assignment satisfies the set
// rules and loads (independence aside), the network admits a flow; and
// whenever its flow is integral, the extracted assignment is feasible.
TEST(BuildNetwork, RelaxationAgreesWithEnumeration) {
  int integral = 0;
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    GenConfig cfg = Preset("tiny-oracle");
    cfg.seed = seed;
    cfg.dep_rate = 0.0;
    cfg.n_papers = 2 + seed % 3;
    const ConferenceInstance inst = Generate(cfg).instance;
    const auto brute = oracle::BestAssignment(inst, PcPairs(inst), Zeros(inst),
                                              UpperBounds(inst));
    BuiltNetwork b;
    const FlowOutcome out = SolveSixLayer(inst, &b);
    if (brute.feasible) {
      ASSERT_TRUE(IsFeasible(out)) << "seed " << seed;
    }
    if (!IsFeasible(out)) continue;
    Assignment a;
    try {
      a = ExtractAssignment(std::get<FlowResult>(out), b.layout, inst);
    } catch (const std::logic_error&) {
      continue;  // fractional split across decision edges
    }
    ++integral;
    EXPECT_TRUE(IsFeasible(a, inst, false, 0.0).feasible) << "seed " << seed;
  }
  EXPECT_GT(integral, 0);
}

}  // namespace
}  // namespace revcover

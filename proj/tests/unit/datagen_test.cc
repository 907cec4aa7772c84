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


#include "revcover/datagen.h"

#include <gtest/gtest.h>

#include "revcover/io.h"

namespace revcover {
namespace {

TEST(Generate, DeterministicUnderSeed) {
  GenConfig c;
  c.seed = 42;
  const std::string a = InstanceToJson(Generate(c).instance).dump();
  const std::string b = InstanceToJson(Generate(c).instance).dump();
  EXPECT_EQ(a, b);
  c.seed = 43;
  EXPECT_NE(a, InstanceToJson(Generate(c).instance).dump());
}

TEST(Generate, SizesAndSchema) {
  GenConfig c;
  c.n_papers = 7;
  c.n_pc = 9;
  c.n_erc = 11;
  const ConferenceInstance inst = Generate(c).instance;
  EXPECT_EQ(inst.num_submissions(), 7);
  EXPECT_EQ(inst.pc().size(), 9u);
  EXPECT_EQ(inst.erc().size(), 11u);
  EXPECT_EQ(ParseInstance(InstanceToJson(inst)).sim_pc(), inst.sim_pc());
  for (const Submission& s : inst.submissions()) EXPECT_FALSE(s.author_ids.empty());
  for (const Reviewer& r : inst.erc()) EXPECT_EQ(r.origin, Origin::kErc);
}

TEST(Generate, IctirPresetSizes) {
  const ConferenceInstance i19 = Generate(Preset("ictir19-like")).instance;
  EXPECT_EQ(i19.num_submissions(), 78);
  EXPECT_EQ(i19.pc().size(), 43u);
  EXPECT_EQ(i19.erc().size(), 6445u);
  const GenConfig i20 = Preset("ictir20-like");
  EXPECT_EQ(i20.n_papers, 65);
  EXPECT_EQ(i20.n_pc, 67);
  EXPECT_EQ(i20.n_erc, 5692);
  const GenConfig tiny = Preset("tiny-oracle");
  EXPECT_LE(tiny.n_papers, 4);
  EXPECT_LE(tiny.n_pc + tiny.n_erc, 8);
}

TEST(Generate, SameTopicBeatsCrossTopic) {
  // A planted paper shares its topic with the first 3 lambda ERC members
  // and with no PC member.
  double same = 0.0, cross = 0.0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    GenConfig c;
    c.n_papers = 4;
    c.n_pc = 10;
    c.n_erc = 12;
    c.planted_problem_papers = 1;
    c.seed = seed;
    const GeneratedInstance g = Generate(c);
    const int j = *g.instance.FindSubmission(g.planted_papers.at(0));
    double s = 0, x = 0;
    for (int k = 0; k < 3 * c.lambda; ++k) s += std::max(0.0, g.instance.sim_erc()(k, j));
    for (int k = 0; k < c.n_pc; ++k) x += std::max(0.0, g.instance.sim_pc()(k, j));
    same += s / (3 * c.lambda);
    cross += x / c.n_pc;
  }
  EXPECT_GT(same / 100 - cross / 100, 0.1);
}

TEST(ValidateGenConfig, Errors) {
  GenConfig c;
  c.n_topics = 100000;
  EXPECT_THROW(ValidateGenConfig(c), GenConfigError);
  c = GenConfig{};
  c.coi_rate = 1.5;
  EXPECT_THROW(ValidateGenConfig(c), GenConfigError);
  c = GenConfig{};
  c.planted_problem_papers = c.n_papers + 1;
  EXPECT_THROW(ValidateGenConfig(c), GenConfigError);
  EXPECT_THROW(Preset("nope"), GenConfigError);
}

TEST(GenConfigJson, RoundTripAndUnknownKeys) {
  const GenConfig c = Preset("ictir20-like");
  const nlohmann::json j = GenConfigToJson(c);
  EXPECT_EQ(GenConfigToJson(GenConfigFromJson(j, GenConfig{})), j);
  EXPECT_THROW(GenConfigFromJson(nlohmann::json{{"bogus", 1}}, GenConfig{}),
               GenConfigError);
}

TEST(PseudoWord, DistinctWithinCapacity) {
  std::set<std::string> seen;
  for (int i = 0; i < 5000; ++i) seen.insert(PseudoWord(i));
  EXPECT_EQ(seen.size(), 5000u);
  EXPECT_THROW(PseudoWord(PseudoWordCapacity()), std::out_of_range);
}

}  // namespace
}  // namespace revcover

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

// Synthetic conferences from a word-bag topic model.
//
// Every topic owns `topic_vocab_size` pseudo-words and all documents share
// `general_vocab_size` more. A document with topics T draws each token from
// T (uniformly over its topics and their words) with probability
// `topic_share`, else from the general vocabulary. Planted problem papers
// use a reserved topic that only `planted_pc_support` PC members hold.

#ifndef REVCOVER_DATAGEN_H_
#define REVCOVER_DATAGEN_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "revcover/model.h"

namespace revcover {

class GenConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AttributeMarginals {
  // industry, academia, both
  std::array<double, 3> background = {0.25, 0.5, 0.25};
  // senior, advanced, junior
  std::array<double, 3> seniority = {0.35, 0.35, 0.3};
  // south_america, africa, antarctica, asia, oceania, north_america, europe
  std::array<double, kNumContinents> continent = {0.04, 0.03, 0.0, 0.22,
                                                  0.05, 0.28, 0.38};
  // Chance of a second, distinct location.
  double second_location = 0.15;
};

struct GenConfig {
  int n_papers = 20;
  int n_pc = 15;
  int n_erc = 100;
  int n_topics = 8;
  int topic_vocab_size = 40;
  int general_vocab_size = 200;
  int words_per_paper = 120;
  int words_per_profile = 150;
  double topic_share = 0.7;
  AttributeMarginals attribute_marginals;
  // Per (reviewer, paper) pair.
  double coi_rate = 0.01;
  // Per reviewer pair with at least one PC member.
  double dep_rate = 0.03;
  // Per ERC-ERC pair; negative means dep_rate.
  double erc_dep_rate = -1.0;
  int planted_problem_papers = 0;
  int planted_pc_support = 0;
  int lambda = 3;
  int mu_lower = 0;
  int mu_upper = 6;
  uint64_t seed = 1;
};

struct GeneratedInstance {
  ConferenceInstance instance;
  std::vector<std::string> planted_papers;
};

// Throws GenConfigError on an invalid configuration.
void ValidateGenConfig(const GenConfig& config);
GeneratedInstance Generate(const GenConfig& config);

// "ictir19-like", "ictir20-like" or "tiny-oracle".
GenConfig Preset(std::string_view name);
std::vector<std::string> PresetNames();

// Partial overrides: any GenConfig field name; unknown keys throw.
GenConfig GenConfigFromJson(const nlohmann::json& doc, GenConfig base);
nlohmann::json GenConfigToJson(const GenConfig& config);

// Number of distinct pseudo-words available.
int PseudoWordCapacity();
std::string PseudoWord(int index);

}  // namespace revcover

#endif  // REVCOVER_DATAGEN_H_

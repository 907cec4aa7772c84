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

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

#include "revcover/textsim.h"

namespace revcover {

namespace {

constexpr std::string_view kConsonants = "bcdfghjklmnprstvz";
constexpr std::string_view kVowels = "aeiou";
constexpr int kSyllables = 3;

int SyllableCount() {
  return static_cast<int>(kConsonants.size() * kVowels.size());
}

std::string Numbered(std::string_view prefix, int n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, n);
  return std::string(prefix) + buf;
}

int Width(int n) { return static_cast<int>(std::to_string(std::max(n, 1)).size()); }

bool Bernoulli(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace

int PseudoWordCapacity() {
  int cap = 1;
  for (int i = 0; i < kSyllables; ++i) cap *= SyllableCount();
  return cap;
}

std::string PseudoWord(int index) {
  if (index < 0 || index >= PseudoWordCapacity()) {
    throw std::out_of_range("pseudo-word index out of range");
  }
  std::string word;
  for (int i = 0; i < kSyllables; ++i) {
    const int s = index % SyllableCount();
    index /= SyllableCount();
    word.push_back(kConsonants[s / kVowels.size()]);
    word.push_back(kVowels[s % kVowels.size()]);
  }
  return word;
}

void ValidateGenConfig(const GenConfig& c) {
  auto fail = [](const std::string& m) { throw GenConfigError(m); };
  if (c.n_papers < 1 || c.n_pc < 1 || c.n_erc < 0) {
    fail("n_papers and n_pc must be positive, n_erc non-negative");
  }
  if (c.n_topics < 1 || c.topic_vocab_size < 1 || c.general_vocab_size < 0) {
    fail("n_topics and topic_vocab_size must be positive");
  }
  const int64_t words = static_cast<int64_t>(c.n_topics) * c.topic_vocab_size +
                        c.general_vocab_size;
  if (words > PseudoWordCapacity()) {
    fail("vocabulary of " + std::to_string(words) +
         " words exceeds the generator capacity of " +
         std::to_string(PseudoWordCapacity()));
  }
  if (c.words_per_paper < 1 || c.words_per_profile < 1) {
    fail("document lengths must be positive");
  }
  auto rate = [&](double r, const char* name) {
    if (!(r >= 0.0 && r <= 1.0)) fail(std::string(name) + " must lie in [0, 1]");
  };
  rate(c.topic_share, "topic_share");
  rate(c.coi_rate, "coi_rate");
  rate(c.dep_rate, "dep_rate");
  if (c.erc_dep_rate >= 0.0) rate(c.erc_dep_rate, "erc_dep_rate");
  rate(c.attribute_marginals.second_location, "second_location");
  if (c.planted_problem_papers < 0 || c.planted_problem_papers > c.n_papers) {
    fail("planted_problem_papers must lie in [0, n_papers]");
  }
  if (c.planted_problem_papers > 0 && c.n_topics < 2) {
    fail("planting problem papers needs at least two topics");
  }
  if (c.planted_pc_support < 0 || c.planted_pc_support > c.n_pc) {
    fail("planted_pc_support must lie in [0, n_pc]");
  }
  if (c.lambda < 1) fail("lambda must be positive");
  if (c.mu_lower < 0 || c.mu_upper < c.mu_lower) {
    fail("need 0 <= mu_lower <= mu_upper");
  }
  auto weights = [&](std::span<const double> w, const char* name) {
    double sum = 0.0;
    for (double x : w) {
      if (!(x >= 0.0)) fail(std::string(name) + " weights must be >= 0");
      sum += x;
    }
    if (!(sum > 0.0)) fail(std::string(name) + " weights sum to zero");
  };
  weights(c.attribute_marginals.background, "background");
  weights(c.attribute_marginals.seniority, "seniority");
  weights(c.attribute_marginals.continent, "continent");
}

GeneratedInstance Generate(const GenConfig& c) {
  ValidateGenConfig(c);
  std::mt19937_64 rng(c.seed);
  const bool planting = c.planted_problem_papers > 0;
  const int reserved = planting ? c.n_topics - 1 : -1;
  const int ordinary_topics = planting ? c.n_topics - 1 : c.n_topics;

  auto pick_topics = [&](int pool_size) {
    std::uniform_int_distribution<int> topic(0, pool_size - 1);
    std::vector<int> t = {topic(rng)};
    if (pool_size > 1 && Bernoulli(rng, 0.5)) {
      int second = topic(rng);
      while (second == t[0]) second = topic(rng);
      t.push_back(second);
    }
    return t;
  };
  const int general_base = c.n_topics * c.topic_vocab_size;
  auto write_text = [&](const std::vector<int>& topics, int length) {
    std::uniform_int_distribution<int> topic_word(0, c.topic_vocab_size - 1);
    std::uniform_int_distribution<int> which(0,
                                             static_cast<int>(topics.size()) - 1);
    std::string text;
    for (int w = 0; w < length; ++w) {
      int index;
      if (c.general_vocab_size == 0 || Bernoulli(rng, c.topic_share)) {
        index = topics[which(rng)] * c.topic_vocab_size + topic_word(rng);
      } else {
        index = general_base + std::uniform_int_distribution<int>(
                                   0, c.general_vocab_size - 1)(rng);
      }
      if (!text.empty()) text.push_back(' ');
      text += PseudoWord(index);
    }
    return text;
  };

  const AttributeMarginals& am = c.attribute_marginals;
  std::discrete_distribution<int> bg(am.background.begin(), am.background.end());
  std::discrete_distribution<int> sen(am.seniority.begin(), am.seniority.end());
  std::discrete_distribution<int> cont(am.continent.begin(), am.continent.end());
  static constexpr std::array<Background, 3> kBg = {
      Background::kIndustry, Background::kAcademia, Background::kBoth};
  auto make_reviewer = [&](std::string id, Origin origin,
                           std::vector<int> topics) {
    Reviewer r;
    r.id = std::move(id);
    r.name = PseudoWord(std::uniform_int_distribution<int>(
                 0, PseudoWordCapacity() - 1)(rng)) +
             " " +
             PseudoWord(std::uniform_int_distribution<int>(
                 0, PseudoWordCapacity() - 1)(rng));
    r.name[0] = static_cast<char>(r.name[0] - 'a' + 'A');
    r.background = kBg[bg(rng)];
    r.seniority = static_cast<Seniority>(sen(rng));
    const int first = cont(rng);
    r.locations.Insert(static_cast<Continent>(first));
    if (Bernoulli(rng, am.second_location)) {
      int second = cont(rng);
      for (int tries = 0; second == first && tries < 16; ++tries) {
        second = cont(rng);
      }
      if (second != first) r.locations.Insert(static_cast<Continent>(second));
    }
    r.mu_lower = c.mu_lower;
    r.mu_upper = c.mu_upper;
    r.origin = origin;
    r.profile_text = write_text(topics, c.words_per_profile);
    return r;
  };

  std::vector<int> planted_index(c.n_papers);
  std::iota(planted_index.begin(), planted_index.end(), 0);
  std::shuffle(planted_index.begin(), planted_index.end(), rng);
  planted_index.resize(c.planted_problem_papers);
  std::sort(planted_index.begin(), planted_index.end());

  GeneratedInstance out;
  std::vector<Submission> subs(c.n_papers);
  for (int j = 0; j < c.n_papers; ++j) {
    const bool planted =
        std::binary_search(planted_index.begin(), planted_index.end(), j);
    subs[j].id = Numbered("p", j + 1, Width(c.n_papers));
    const std::vector<int> topics =
        planted ? std::vector<int>{reserved} : pick_topics(ordinary_topics);
    subs[j].text = write_text(topics, c.words_per_paper);
    if (planted) out.planted_papers.push_back(subs[j].id);
  }

  std::vector<Reviewer> pc, erc;
  for (int i = 0; i < c.n_pc; ++i) {
    std::vector<int> topics = pick_topics(ordinary_topics);
    // When planting, the first PC members hold one ordinary topic each so
    // that only planted papers are topic-isolated.
    if (planting && i < ordinary_topics) {
      topics.erase(std::remove(topics.begin(), topics.end(), i), topics.end());
      topics.insert(topics.begin(), i);
      topics.resize(std::min<size_t>(topics.size(), 2));
    }
    if (planting && i < c.planted_pc_support) topics = {topics[0], reserved};
    pc.push_back(make_reviewer(Numbered("pc", i + 1, Width(c.n_pc)),
                               Origin::kOriginalPc, topics));
  }
  // Enough ERC holders of the reserved topic to cover a planted paper.
  const int erc_support = planting ? std::min(c.n_erc, 3 * c.lambda) : 0;
  for (int i = 0; i < c.n_erc; ++i) {
    std::vector<int> topics = pick_topics(c.n_topics);
    if (i < erc_support) topics = {reserved};
    erc.push_back(make_reviewer(Numbered("erc", i + 1, Width(c.n_erc)),
                                Origin::kErc, topics));
  }

  const int npc = c.n_pc;
  const int pool = npc + c.n_erc;
  for (int j = 0; j < c.n_papers; ++j) {
    const int external = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int a = 1; a <= external; ++a) {
      subs[j].author_ids.push_back(subs[j].id + "-author" + std::to_string(a));
    }
    for (int k = 0; k < pool; ++k) {
      if (Bernoulli(rng, c.coi_rate)) {
        subs[j].author_ids.push_back(k < npc ? pc[k].id : erc[k - npc].id);
      }
    }
  }

  DependencyMatrix dep(pool);
  auto sample_row = [&](int a, int b_begin, double rate) {
    if (rate <= 0.0 || b_begin >= pool) return;
    std::geometric_distribution<int> skip(std::min(rate, 1.0));
    for (int64_t b = b_begin + skip(rng); b < pool; b += 1 + skip(rng)) {
      dep.Add(a, static_cast<int>(b));
    }
  };
  const double erc_rate = c.erc_dep_rate >= 0.0 ? c.erc_dep_rate : c.dep_rate;
  for (int a = 0; a < pool; ++a) {
    sample_row(a, a + 1, a < npc ? c.dep_rate : erc_rate);
  }

  SimilarityBuild sim = ComputeSimilarity(subs, pc, erc);
  out.instance = ConferenceInstance(c.lambda, std::move(subs), std::move(pc),
                                    std::move(erc), std::move(sim.pc),
                                    std::move(sim.erc), std::move(dep));
  return out;
}

std::vector<std::string> PresetNames() {
  return {"ictir19-like", "ictir20-like", "tiny-oracle"};
}

GenConfig Preset(std::string_view name) {
  GenConfig c;
  if (name == "ictir19-like") {
    c.n_papers = 78;
    c.n_pc = 43;
    c.n_erc = 6445;
    c.n_topics = 12;
    c.mu_upper = 9;
    c.words_per_profile = 100;
    c.dep_rate = 0.03;
    c.erc_dep_rate = 0.0002;
    c.coi_rate = 0.005;
  } else if (name == "ictir20-like") {
    c.n_papers = 65;
    c.n_pc = 67;
    c.n_erc = 5692;
    c.n_topics = 12;
    c.mu_upper = 7;
    c.words_per_profile = 100;
    c.dep_rate = 0.03;
    c.erc_dep_rate = 0.0002;
    c.coi_rate = 0.005;
  } else if (name == "tiny-oracle") {
    c.n_papers = 3;
    c.n_pc = 7;
    c.n_erc = 1;
    c.n_topics = 3;
    c.topic_vocab_size = 15;
    c.general_vocab_size = 40;
    c.words_per_paper = 40;
    c.words_per_profile = 40;
    c.mu_upper = 2;
    c.dep_rate = 0.08;
    c.coi_rate = 0.05;
  } else {
    throw GenConfigError("unknown preset '" + std::string(name) + "'");
  }
  return c;
}

namespace {

template <typename T>
void ReadField(const nlohmann::json& doc, const char* key, T& field) {
  if (!doc.contains(key)) return;
  try {
    field = doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw GenConfigError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

GenConfig GenConfigFromJson(const nlohmann::json& doc, GenConfig c) {
  if (!doc.is_object()) throw GenConfigError("config must be an object");
  static const std::vector<std::string> kKeys = {
      "n_papers", "n_pc", "n_erc", "n_topics", "topic_vocab_size",
      "general_vocab_size", "words_per_paper", "words_per_profile",
      "topic_share", "attribute_marginals", "coi_rate", "dep_rate",
      "erc_dep_rate", "planted_problem_papers", "planted_pc_support",
      "lambda", "mu_lower", "mu_upper", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw GenConfigError("unknown generator field '" + key + "'");
    }
  }
  ReadField(doc, "n_papers", c.n_papers);
  ReadField(doc, "n_pc", c.n_pc);
  ReadField(doc, "n_erc", c.n_erc);
  ReadField(doc, "n_topics", c.n_topics);
  ReadField(doc, "topic_vocab_size", c.topic_vocab_size);
  ReadField(doc, "general_vocab_size", c.general_vocab_size);
  ReadField(doc, "words_per_paper", c.words_per_paper);
  ReadField(doc, "words_per_profile", c.words_per_profile);
  ReadField(doc, "topic_share", c.topic_share);
  ReadField(doc, "coi_rate", c.coi_rate);
  ReadField(doc, "dep_rate", c.dep_rate);
  ReadField(doc, "erc_dep_rate", c.erc_dep_rate);
  ReadField(doc, "planted_problem_papers", c.planted_problem_papers);
  ReadField(doc, "planted_pc_support", c.planted_pc_support);
  ReadField(doc, "lambda", c.lambda);
  ReadField(doc, "mu_lower", c.mu_lower);
  ReadField(doc, "mu_upper", c.mu_upper);
  ReadField(doc, "seed", c.seed);
  if (doc.contains("attribute_marginals")) {
    const auto& am = doc["attribute_marginals"];
    if (!am.is_object()) throw GenConfigError("attribute_marginals: object");
    ReadField(am, "background", c.attribute_marginals.background);
    ReadField(am, "seniority", c.attribute_marginals.seniority);
    ReadField(am, "continent", c.attribute_marginals.continent);
    ReadField(am, "second_location", c.attribute_marginals.second_location);
  }
  return c;
}

nlohmann::json GenConfigToJson(const GenConfig& c) {
  const AttributeMarginals& am = c.attribute_marginals;
  return {{"n_papers", c.n_papers},
          {"n_pc", c.n_pc},
          {"n_erc", c.n_erc},
          {"n_topics", c.n_topics},
          {"topic_vocab_size", c.topic_vocab_size},
          {"general_vocab_size", c.general_vocab_size},
          {"words_per_paper", c.words_per_paper},
          {"words_per_profile", c.words_per_profile},
          {"topic_share", c.topic_share},
          {"attribute_marginals",
           {{"background", am.background},
            {"seniority", am.seniority},
            {"continent", am.continent},
            {"second_location", am.second_location}}},
          {"coi_rate", c.coi_rate},
          {"dep_rate", c.dep_rate},
          {"erc_dep_rate", c.erc_dep_rate},
          {"planted_problem_papers", c.planted_problem_papers},
          {"planted_pc_support", c.planted_pc_support},
          {"lambda", c.lambda},
          {"mu_lower", c.mu_lower},
          {"mu_upper", c.mu_upper},
          {"seed", c.seed}};
}

}  // namespace revcover

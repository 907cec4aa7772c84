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


#include "revcover/io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.h"
#include "revcover/datagen.h"

namespace revcover {
namespace {

using nlohmann::json;

json Minimal() {
  return json::parse(R"({
    "lambda": 3,
    "submissions": [{"id": "m0", "text": "graph flow", "authors": ["x"]}],
    "pc": [
      {"id": "i", "profBG": "both", "locations": ["europe"], "seniority": "senior"},
      {"id": "k", "profBG": "academia", "locations": ["asia"], "seniority": "senior"},
      {"id": "r", "profBG": "industry", "locations": ["north_america"], "seniority": "junior"}
    ],
    "erc": [],
    "sim_pc": [[0.5], [0.5], [0.5]],
    "dep": [["i", "k"]]
  })");
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("revcover_io_" + std::to_string(::getpid()) + "_" + name);
}

TEST(ParseInstance, MinimalFixture) {
  const ConferenceInstance inst = ParseInstance(Minimal());
  EXPECT_EQ(inst.num_submissions(), 1);
  EXPECT_EQ(inst.pc().size(), 3u);
  EXPECT_TRUE(inst.dep()(0, 1));
  EXPECT_EQ(inst.sim_pc()(2, 0), 0.5);
}

TEST(ParseInstance, OutOfRangeSimilarity) {
  json doc = Minimal();
  doc["sim_pc"][1][0] = 1.5;
  try {
    ParseInstance(doc);
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/sim_pc/1/0");
  }
}

TEST(ParseInstance, ReportsFieldPath) {
  json doc = Minimal();
  doc["pc"][2]["seniority"] = "emeritus";
  try {
    ParseInstance(doc);
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/pc/2/seniority");
  }
  doc = Minimal();
  doc.erase("submissions");
  EXPECT_THROW(ParseInstance(doc), SchemaError);
}

TEST(ParseInstance, ComputesMissingSimilarities) {
  json doc = Minimal();
  doc.erase("sim_pc");
  const ConferenceInstance inst = ParseInstance(doc);
  EXPECT_EQ(inst.sim_pc().rows(), 3);
}

TEST(Instance, RoundTripOnGeneratedCorpus) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    GenConfig c;
    c.seed = seed;
    const ConferenceInstance inst = Generate(c).instance;
    const auto path = TempPath("inst.json");
    SaveInstance(inst, path);
    const ConferenceInstance back = LoadInstance(path);
    EXPECT_EQ(InstanceToJson(back), InstanceToJson(inst));
    EXPECT_EQ(back.pc(), inst.pc());
    EXPECT_EQ(back.dep(), inst.dep());
    std::filesystem::remove(path);
  }
}

TEST(Assignment, RoundTrip) {
  const Assignment a =
      testing::MakeAssignment(3, {{"m0", {"i", "k", "r"}}, {"m1", {"r", "k", "i"}}});
  const auto path = TempPath("assign.json");
  SaveAssignment(a, json{{"seed", 3}}, path);
  const Assignment back = LoadAssignment(path, 3);
  EXPECT_EQ(back.sets, a.sets);
  EXPECT_EQ(ParseAssignment(json{{"m0", {"i", "k", "r"}}}, 3).sets.at("m0").size(),
            3u);
  std::filesystem::remove(path);
}

TEST(LoadInstance, MissingFileIsSchemaError) {
  EXPECT_THROW(LoadInstance("/nonexistent/revcover.json"), SchemaError);
}

TEST(ReadSimilarityCsv, ReordersByHeader) {
  std::istringstream in("reviewer,m1,m0\nk,0.2,0.3\ni,0.4,-1\n");
  const SimilarityMatrix m = ReadSimilarityCsv(in, {"i", "k"}, {"m0", "m1"});
  EXPECT_EQ(m(0, 0), -1.0);
  EXPECT_EQ(m(0, 1), 0.4);
  EXPECT_EQ(m(1, 0), 0.3);
}

TEST(WriteFileAtomic, ReplacesContent) {
  const auto path = TempPath("atomic.txt");
  WriteFileAtomic(path, "one");
  WriteFileAtomic(path, "two");
  EXPECT_EQ(ReadFile(path), "two");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace revcover

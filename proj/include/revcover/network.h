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

// Six-layer diversity flow network.
//
//   L1 source -> L2 reviewer -> L3 decision (one per allowed pair)
//     -> L4 diversity (20 nodes per paper) -> L5 paper -> L6 sink
//
// One reviewer->paper assignment carries kFlowScale = 21 units, split at
// the decision node into 7 background units, one unit for each of the 7
// continents (presence node l_y or absence node l_y'), and 7 seniority
// units. Per-paper bounds on the L4->L5 edges encode the set rules:
//
//   a_0 (industry only), a_1 (academia only) <= 7(lambda-1)
//   s_0 (senior) >= 7; s_1, s_2 <= 7(lambda-1)
//   l_y <= lambda-1; l_y' >= 1 for continents held by any active reviewer
//
// Reviewer independence is not expressible in a flow network and is
// handled by the assignment search on top of it.

#ifndef REVCOVER_NETWORK_H_
#define REVCOVER_NETWORK_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "revcover/flow.h"
#include "revcover/model.h"

namespace revcover {

inline constexpr int64_t kFlowScale = 21;
inline constexpr int64_t kBackgroundUnits = 7;
inline constexpr int64_t kSeniorityUnits = 7;
inline constexpr int64_t kLocationUnits = 1;
inline constexpr int kDiversityNodesPerPaper = 20;
// Integer scale of transformed similarities on decision edges.
inline constexpr double kCostScale = 1e4;

class NetworkBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReviewerPaper {
  int reviewer = 0;  // pool index
  int paper = 0;     // submission index
  friend auto operator<=>(const ReviewerPaper&,
                          const ReviewerPaper&) = default;
};

// Papers in scope plus the reviewer/paper pairs allowed to carry an
// assignment. `allowed` is sorted by (reviewer, paper) and duplicate free.
struct PairSet {
  std::vector<int> papers;
  std::vector<ReviewerPaper> allowed;

  bool Contains(ReviewerPaper p) const;
  void Normalize();
};

// Pairs between `reviewers` and `papers` whose similarity is >= theta and
// not a conflict.
PairSet MakePairSet(const ConferenceInstance& instance,
                    std::span<const int> reviewers, std::span<const int> papers,
                    double theta);

// Position of each diversity node within a paper's block of 20.
namespace diversity_slot {
inline constexpr int kIndustry = 0;  // a_0
inline constexpr int kAcademia = 1;  // a_1
inline constexpr int kBoth = 2;      // a_2
inline constexpr int kPresent = 3;   // l_0 .. l_6
inline constexpr int kAbsent = 10;   // l_0' .. l_6'
inline constexpr int kSenior = 17;   // s_0 .. s_2
}  // namespace diversity_slot

struct DecisionNode {
  ReviewerPaper pair;
  int node = 0;
  int edge = 0;  // L2 -> L3 edge carrying the assignment flow
};

struct NetworkLayout {
  int source = 0;
  int sink = 0;
  int64_t scale = kFlowScale;
  int lambda = 3;
  std::vector<int> reviewers;       // pool indices, L2 order
  std::vector<int> reviewer_nodes;  // aligned with reviewers
  std::vector<int> source_edges;    // L1 -> L2, aligned with reviewers
  std::vector<int> papers;          // submission indices, L5 order
  std::vector<int> paper_nodes;
  std::vector<DecisionNode> decisions;  // sorted by (reviewer, paper)
  std::vector<std::array<int, kDiversityNodesPerPaper>> diversity_nodes;
};

struct BuiltNetwork {
  BoundedFlowNetwork network;
  NetworkLayout layout;
};

// Integer cost of one flow unit on a decision edge: -round(f(s) * 1e4).
int64_t DecisionUnitCost(double similarity);

// `mu_lower` / `mu_upper` are pool-indexed. Reviewers get an L2 node when
// they appear in a pair or have a positive lower bound.
BuiltNetwork BuildNetwork(const ConferenceInstance& instance,
                          const PairSet& pairs, std::span<const int> mu_lower,
                          std::span<const int> mu_upper, bool with_costs);

// Reads reviewer sets off the decision edges. Throws std::logic_error on a
// decision edge carrying partial flow or a paper without lambda reviewers.
Assignment ExtractAssignment(const FlowResult& result,
                             const NetworkLayout& layout,
                             const ConferenceInstance& instance);

}  // namespace revcover

#endif  // REVCOVER_NETWORK_H_

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

// Integral network flows with per-edge lower bounds.
//
// A BoundedFlowNetwork has a designated source and sink and an optional
// required throughput ("demand"). Solvers reduce lower bounds to a
// super-source/super-sink problem:
//
//   * MaxFlow       - Dinic, network without lower bounds.
//   * FeasibleFlow  - any flow meeting every bound (Dinic on the reduction).
//   * MinCostFeasibleFlow - cheapest feasible flow; negative-cost edges
//     start saturated, then successive shortest paths with Johnson
//     potentials, augmenting a blocking flow on the zero-reduced-cost
//     subgraph per Dijkstra phase.
//
// Infeasible problems return a cut certificate instead of a flow.

#ifndef REVCOVER_FLOW_H_
#define REVCOVER_FLOW_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace revcover {

inline constexpr int64_t kInfiniteCapacity =
    std::numeric_limits<int64_t>::max() / 4;

struct FlowEdge {
  int from = 0;
  int to = 0;
  int64_t lower = 0;
  int64_t capacity = 0;
  int64_t cost = 0;
  int64_t tag = 0;
};

class BoundedFlowNetwork {
 public:
  BoundedFlowNetwork() = default;

  // Nodes are dense integers in creation order.
  int AddNode(std::string name = {});
  int AddEdge(int from, int to, int64_t lower, int64_t capacity,
              int64_t cost = 0, int64_t tag = 0);
  void SetBounds(int edge, int64_t lower, int64_t capacity);
  void SetCost(int edge, int64_t cost) { edges_[edge].cost = cost; }

  void set_source(int node) { source_ = node; }
  void set_sink(int node) { sink_ = node; }
  // Required source->sink throughput; unset means any value is acceptable.
  void set_demand(std::optional<int64_t> demand) { demand_ = demand; }

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }
  std::optional<int64_t> demand() const { return demand_; }
  const FlowEdge& edge(int e) const { return edges_[e]; }
  const std::vector<FlowEdge>& edges() const { return edges_; }
  const std::string& name(int node) const { return names_[node]; }

  // Structural problems (dangling endpoints, self-loops, source with
  // incoming edges, ...). Empty when valid. A lower bound above the
  // capacity is not structural; solvers report it as infeasibility.
  std::string Validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<FlowEdge> edges_;
  int source_ = -1;
  int sink_ = -1;
  std::optional<int64_t> demand_;
};

struct FlowResult {
  std::vector<int64_t> flow;  // per edge, in edge order
  int64_t value = 0;          // net flow leaving the source
  int64_t cost = 0;           // sum of cost * flow
};

struct Infeasible {
  // Nodes of the original network on the source side of the saturated cut
  // in the reduced problem.
  std::vector<int> source_side;
  // Nodes whose lower-bound deficit could not be met.
  std::vector<int> starved;
  std::string reason;
};

using FlowOutcome = std::variant<FlowResult, Infeasible>;

inline bool IsFeasible(const FlowOutcome& outcome) {
  return std::holds_alternative<FlowResult>(outcome);
}

// Maximum source->sink flow. Throws std::invalid_argument if any edge has
// a positive lower bound or the network is structurally invalid.
FlowResult MaxFlow(const BoundedFlowNetwork& net);

FlowOutcome FeasibleFlow(const BoundedFlowNetwork& net);

// Throws std::invalid_argument when a negative-cost edge has unbounded
// capacity.
FlowOutcome MinCostFeasibleFlow(const BoundedFlowNetwork& net);

// Checks conservation and bounds of `result` against `net`; empty when ok.
std::string CheckFlow(const BoundedFlowNetwork& net, const FlowResult& result);

// Graphviz dump with lower/cap/cost/flow edge labels.
std::string ToDot(const BoundedFlowNetwork& net,
                  const FlowResult* result = nullptr);

}  // namespace revcover

#endif  // REVCOVER_FLOW_H_

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

#include "revcover/flow.h"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace revcover {

int BoundedFlowNetwork::AddNode(std::string name) {
  names_.push_back(std::move(name));
  return num_nodes() - 1;
}

int BoundedFlowNetwork::AddEdge(int from, int to, int64_t lower,
                                int64_t capacity, int64_t cost, int64_t tag) {
  if (from < 0 || to < 0 || from >= num_nodes() || to >= num_nodes()) {
    throw std::out_of_range("edge endpoint is not a node");
  }
  if (lower < 0) throw std::invalid_argument("negative lower bound");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  edges_.push_back({from, to, lower, capacity, cost, tag});
  return num_edges() - 1;
}

void BoundedFlowNetwork::SetBounds(int edge, int64_t lower, int64_t capacity) {
  if (lower < 0 || capacity < 0) {
    throw std::invalid_argument("negative edge bound");
  }
  edges_[edge].lower = lower;
  edges_[edge].capacity = capacity;
}

std::string BoundedFlowNetwork::Validate() const {
  if (source_ < 0 || source_ >= num_nodes()) return "source is not set";
  if (sink_ < 0 || sink_ >= num_nodes()) return "sink is not set";
  if (source_ == sink_) return "source and sink coincide";
  if (demand_ && *demand_ < 0) return "negative demand";
  for (int e = 0; e < num_edges(); ++e) {
    const FlowEdge& edge = edges_[e];
    if (edge.from == edge.to) {
      return "edge " + std::to_string(e) + " is a self-loop";
    }
    if (edge.to == source_) {
      return "edge " + std::to_string(e) + " enters the source";
    }
    if (edge.from == sink_) {
      return "edge " + std::to_string(e) + " leaves the sink";
    }
  }
  return {};
}

namespace {

// Residual graph in CSR form. Arc 2k is the forward arc of input edge k,
// arc 2k + 1 its reverse.
class ResidualGraph {
 public:
  explicit ResidualGraph(int n) : n_(n) {}

  int AddArc(int u, int v, int64_t cap, int64_t cost) {
    const int id = static_cast<int>(to_.size());
    from_.push_back(u);
    to_.push_back(v);
    cap_.push_back(cap);
    cost_.push_back(cost);
    from_.push_back(v);
    to_.push_back(u);
    cap_.push_back(0);
    cost_.push_back(-cost);
    return id;
  }

  void Finalize() {
    start_.assign(n_ + 1, 0);
    for (int u : from_) ++start_[u + 1];
    for (int i = 0; i < n_; ++i) start_[i + 1] += start_[i];
    order_.resize(from_.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (int a = 0; a < static_cast<int>(from_.size()); ++a) {
      order_[fill[from_[a]]++] = a;
    }
  }

  int num_nodes() const { return n_; }
  int begin(int u) const { return start_[u]; }
  int end(int u) const { return start_[u + 1]; }
  int arc_at(int slot) const { return order_[slot]; }
  int head(int a) const { return to_[a]; }
  int64_t residual(int a) const { return cap_[a]; }
  int64_t cost(int a) const { return cost_[a]; }
  void Push(int a, int64_t amount) {
    cap_[a] -= amount;
    cap_[a ^ 1] += amount;
  }
  // Flow currently on the forward arc a (= residual of its reverse).
  int64_t flow(int a) const { return cap_[a ^ 1]; }

  // Dinic augmentation restricted to arcs accepted by `allowed`.
  template <typename Allowed>
  int64_t BlockingFlows(int s, int t, int64_t limit, Allowed allowed) {
    int64_t total = 0;
    level_.assign(n_, -1);
    iter_.assign(n_, 0);
    while (total < limit && BuildLevels(s, t, allowed)) {
      for (int u = 0; u < n_; ++u) iter_[u] = start_[u];
      while (total < limit) {
        const int64_t pushed = Augment(s, t, limit - total, allowed);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> Reachable(int s) const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int slot = start_[u]; slot < start_[u + 1]; ++slot) {
        const int a = order_[slot];
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

 private:
  template <typename Allowed>
  bool BuildLevels(int s, int t, Allowed& allowed) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue = {s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int slot = start_[u]; slot < start_[u + 1]; ++slot) {
        const int a = order_[slot];
        const int v = to_[a];
        if (cap_[a] > 0 && level_[v] < 0 && allowed(a)) {
          level_[v] = level_[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[t] >= 0;
  }

  template <typename Allowed>
  int64_t Augment(int u, int t, int64_t limit, Allowed& allowed) {
    if (u == t) return limit;
    for (int& slot = iter_[u]; slot < start_[u + 1]; ++slot) {
      const int a = order_[slot];
      const int v = to_[a];
      if (cap_[a] <= 0 || level_[v] != level_[u] + 1 || !allowed(a)) continue;
      const int64_t got = Augment(v, t, std::min(limit, cap_[a]), allowed);
      if (got > 0) {
        Push(a, got);
        return got;
      }
    }
    return 0;
  }

  int n_;
  std::vector<int> from_, to_;
  std::vector<int64_t> cap_, cost_;
  std::vector<int> start_, order_;
  std::vector<int> level_, iter_;
};

// Lower-bound reduction: every edge keeps capacity - lower; lower bounds
// become node imbalances served from a super source / to a super sink.
// Arc 2k belongs to input edge k; the return edge t->s (if any) follows.
// With `saturate_negative` every negative-cost edge starts full, which leaves
// a residual graph without negative arcs.
struct Reduction {
  ResidualGraph graph;
  int super_source = 0;
  int super_sink = 0;
  int64_t required = 0;  // total excess that must be routed
  int return_arc = -1;
  std::vector<int64_t> excess;
};

Reduction Reduce(const BoundedFlowNetwork& net, bool saturate_negative) {
  const int n = net.num_nodes();
  Reduction red{ResidualGraph(n + 2), n, n + 1, 0, -1,
                std::vector<int64_t>(n, 0)};
  for (const FlowEdge& e : net.edges()) {
    const int arc = red.graph.AddArc(e.from, e.to, e.capacity - e.lower, e.cost);
    int64_t preset = e.lower;
    if (saturate_negative && e.cost < 0) {
      if (e.capacity >= kInfiniteCapacity) {
        throw std::invalid_argument(
            "negative-cost edge with unbounded capacity");
      }
      red.graph.Push(arc, e.capacity - e.lower);
      preset = e.capacity;
    }
    red.excess[e.to] += preset;
    red.excess[e.from] -= preset;
  }
  const std::optional<int64_t> demand = net.demand();
  if (demand) {
    red.excess[net.source()] += *demand;
    red.excess[net.sink()] -= *demand;
  } else {
    red.return_arc =
        red.graph.AddArc(net.sink(), net.source(), kInfiniteCapacity, 0);
  }
  for (int v = 0; v < n; ++v) {
    if (red.excess[v] > 0) {
      red.graph.AddArc(red.super_source, v, red.excess[v], 0);
      red.required += red.excess[v];
    } else if (red.excess[v] < 0) {
      red.graph.AddArc(v, red.super_sink, -red.excess[v], 0);
    }
  }
  red.graph.Finalize();
  return red;
}

FlowResult Recover(const BoundedFlowNetwork& net, const ResidualGraph& g) {
  FlowResult result;
  result.flow.resize(net.num_edges());
  for (int e = 0; e < net.num_edges(); ++e) {
    const FlowEdge& edge = net.edge(e);
    const int64_t f = edge.lower + g.flow(2 * e);
    result.flow[e] = f;
    result.cost += f * edge.cost;
    if (edge.from == net.source()) result.value += f;
    if (edge.to == net.source()) result.value -= f;
  }
  return result;
}

Infeasible Certificate(const BoundedFlowNetwork& net, const Reduction& red,
                       std::string reason) {
  Infeasible out;
  out.reason = std::move(reason);
  const std::vector<bool> seen = red.graph.Reachable(red.super_source);
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (seen[v]) out.source_side.push_back(v);
  }
  // A deficit node is starved when its arc to the super sink is unsaturated.
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (red.excess[v] >= 0) continue;
    for (int slot = red.graph.begin(v); slot < red.graph.end(v); ++slot) {
      const int a = red.graph.arc_at(slot);
      if ((a & 1) == 0 && red.graph.head(a) == red.super_sink &&
          red.graph.residual(a) > 0) {
        out.starved.push_back(v);
      }
    }
  }
  return out;
}

std::optional<Infeasible> Precheck(const BoundedFlowNetwork& net) {
  if (std::string err = net.Validate(); !err.empty()) {
    throw std::invalid_argument("invalid flow network: " + err);
  }
  for (int e = 0; e < net.num_edges(); ++e) {
    const FlowEdge& edge = net.edge(e);
    if (edge.lower > edge.capacity) {
      Infeasible out;
      out.reason = "edge " + std::to_string(e) +
                   " has lower bound above its capacity";
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

FlowResult MaxFlow(const BoundedFlowNetwork& net) {
  if (std::string err = net.Validate(); !err.empty()) {
    throw std::invalid_argument("invalid flow network: " + err);
  }
  ResidualGraph g(net.num_nodes());
  for (const FlowEdge& e : net.edges()) {
    if (e.lower != 0) {
      throw std::invalid_argument("MaxFlow requires zero lower bounds");
    }
    g.AddArc(e.from, e.to, e.capacity, e.cost);
  }
  g.Finalize();
  g.BlockingFlows(net.source(), net.sink(), kInfiniteCapacity,
                  [](int) { return true; });
  return Recover(net, g);
}

FlowOutcome FeasibleFlow(const BoundedFlowNetwork& net) {
  if (auto bad = Precheck(net)) return *std::move(bad);
  Reduction red = Reduce(net, false);
  const int64_t routed =
      red.graph.BlockingFlows(red.super_source, red.super_sink, red.required,
                              [](int) { return true; });
  if (routed < red.required) {
    return Certificate(net, red, "lower bounds cannot be satisfied");
  }
  return Recover(net, red.graph);
}

FlowOutcome MinCostFeasibleFlow(const BoundedFlowNetwork& net) {
  if (auto bad = Precheck(net)) return *std::move(bad);
  Reduction red = Reduce(net, true);
  ResidualGraph& g = red.graph;
  const int n = g.num_nodes();
  // No residual arc has negative cost, so zero potentials are valid.
  std::vector<int64_t> potential(n, 0);

  constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();
  std::vector<int64_t> dist(n);
  int64_t routed = 0;
  while (routed < red.required) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    using Entry = std::pair<int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[red.super_source] = 0;
    heap.emplace(0, red.super_source);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int slot = g.begin(u); slot < g.end(u); ++slot) {
        const int a = g.arc_at(slot);
        if (g.residual(a) <= 0) continue;
        const int v = g.head(a);
        const int64_t nd = d + g.cost(a) + potential[u] - potential[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    if (dist[red.super_sink] == kUnreached) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != kUnreached) potential[v] += dist[v];
    }
    // Every arc on a shortest path now has zero reduced cost.
    const int64_t pushed = g.BlockingFlows(
        red.super_source, red.super_sink, red.required - routed, [&](int a) {
          const int u = g.head(a ^ 1);
          const int v = g.head(a);
          return dist[u] != kUnreached && dist[v] != kUnreached &&
                 g.cost(a) + potential[u] - potential[v] == 0;
        });
    if (pushed == 0) break;
    routed += pushed;
  }
  if (routed < red.required) {
    return Certificate(net, red, "lower bounds cannot be satisfied");
  }
  return Recover(net, g);
}

std::string CheckFlow(const BoundedFlowNetwork& net, const FlowResult& result) {
  if (static_cast<int>(result.flow.size()) != net.num_edges()) {
    return "flow vector size mismatch";
  }
  std::vector<int64_t> balance(net.num_nodes(), 0);
  int64_t cost = 0;
  for (int e = 0; e < net.num_edges(); ++e) {
    const FlowEdge& edge = net.edge(e);
    const int64_t f = result.flow[e];
    if (f < edge.lower || f > edge.capacity) {
      return "edge " + std::to_string(e) + " flow " + std::to_string(f) +
             " outside [" + std::to_string(edge.lower) + ", " +
             std::to_string(edge.capacity) + "]";
    }
    balance[edge.from] -= f;
    balance[edge.to] += f;
    cost += f * edge.cost;
  }
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (balance[v] != 0) {
      return "conservation violated at node " + std::to_string(v);
    }
  }
  if (-balance[net.source()] != result.value) return "flow value mismatch";
  if (net.demand() && result.value != *net.demand()) {
    return "demand not met";
  }
  if (cost != result.cost) return "cost mismatch";
  return {};
}

std::string ToDot(const BoundedFlowNetwork& net, const FlowResult* result) {
  std::ostringstream out;
  out << "digraph flow {\n  rankdir=LR;\n";
  for (int v = 0; v < net.num_nodes(); ++v) {
    out << "  n" << v << " [label=\""
        << (net.name(v).empty() ? std::to_string(v) : net.name(v)) << "\"];\n";
  }
  for (int e = 0; e < net.num_edges(); ++e) {
    const FlowEdge& edge = net.edge(e);
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\"["
        << edge.lower << "," << edge.capacity << "] c=" << edge.cost;
    if (result != nullptr) out << " f=" << result->flow[e];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace revcover

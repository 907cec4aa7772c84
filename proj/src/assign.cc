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

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "revcover/textsim.h"
#include "spdlog/spdlog.h"

namespace revcover {

namespace {

bool SearchSets(const ConferenceInstance& instance,
                std::span<const int> candidates, size_t next,
                std::vector<int>& chosen, int lambda) {
  if (static_cast<int>(chosen.size()) == lambda) {
    std::vector<const Reviewer*> members;
    for (int k : chosen) members.push_back(&instance.reviewer(k));
    return SetIsDiverse(members);
  }
  const size_t need = lambda - chosen.size();
  for (size_t i = next; i + need <= candidates.size(); ++i) {
    const int k = candidates[i];
    bool independent = true;
    for (int c : chosen) {
      if (instance.dep()(c, k)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    chosen.push_back(k);
    if (SearchSets(instance, candidates, i + 1, chosen, lambda)) return true;
    chosen.pop_back();
  }
  return false;
}

enum class EdgeState : uint8_t { kFree, kForced, kForbidden };

struct Fix {
  int decision;
  EdgeState state;
  bool dependency = false;
};

struct SearchNode {
  std::vector<Fix> fixes;
};

}  // namespace

bool HasValidReviewerSet(const ConferenceInstance& instance,
                         std::span<const int> candidates,
                         std::span<const int> forced) {
  const int lambda = instance.lambda();
  if (static_cast<int>(forced.size()) > lambda) return false;
  std::vector<int> chosen(forced.begin(), forced.end());
  for (size_t a = 0; a < chosen.size(); ++a) {
    for (size_t b = a + 1; b < chosen.size(); ++b) {
      if (instance.dep()(chosen[a], chosen[b])) return false;
    }
  }
  std::vector<int> rest;
  for (int k : candidates) {
    if (std::find(forced.begin(), forced.end(), k) == forced.end()) {
      rest.push_back(k);
    }
  }
  return SearchSets(instance, rest, 0, chosen, lambda);
}

namespace {

// Bipartite assignment flow over the allowed pairs.
struct AssignmentNetwork {
  BoundedFlowNetwork net;
  std::vector<int> papers;                  // submission indices
  std::vector<int> slot_of_paper;           // submission -> slot, -1 outside
  std::vector<ReviewerPaper> pairs;         // aligned with pair_edges
  std::vector<int> pair_edges;
  std::vector<std::vector<int>> pairs_of_slot;
};

AssignmentNetwork BuildAssignmentNetwork(const ConferenceInstance& instance,
                                         const PairSet& pairs,
                                         std::span<const int> mu_lower,
                                         std::span<const int> mu_upper,
                                         bool with_costs) {
  AssignmentNetwork a;
  BoundedFlowNetwork& net = a.net;
  const int source = net.AddNode("source");
  net.set_source(source);
  const int pool = instance.pool_size();
  std::vector<int> node_of_reviewer(pool, -1);
  auto reviewer_node = [&](int k) {
    if (node_of_reviewer[k] < 0) {
      node_of_reviewer[k] = net.AddNode("r:" + instance.reviewer(k).id);
      net.AddEdge(source, node_of_reviewer[k], mu_lower[k], mu_upper[k]);
    }
    return node_of_reviewer[k];
  };
  for (int k = 0; k < pool; ++k) {
    if (mu_lower[k] > 0) reviewer_node(k);
  }
  a.slot_of_paper.assign(instance.num_submissions(), -1);
  std::vector<int> paper_node;
  for (int j : pairs.papers) {
    a.slot_of_paper[j] = static_cast<int>(a.papers.size());
    a.papers.push_back(j);
    paper_node.push_back(net.AddNode("m:" + instance.submissions()[j].id));
  }
  const int sink = net.AddNode("sink");
  net.set_sink(sink);
  a.pairs_of_slot.resize(a.papers.size());
  // Every paper takes exactly lambda units, so shifting all pair costs by
  // one constant keeps the optimum and leaves no negative edge.
  const int64_t shift = -DecisionUnitCost(1.0);
  for (const ReviewerPaper& p : pairs.allowed) {
    const int slot = a.slot_of_paper[p.paper];
    if (slot < 0) throw NetworkBuildError("pair outside the paper scope");
    const int64_t cost =
        with_costs
            ? DecisionUnitCost(instance.similarity(p.reviewer, p.paper)) + shift
            : 0;
    a.pairs_of_slot[slot].push_back(static_cast<int>(a.pairs.size()));
    a.pairs.push_back(p);
    a.pair_edges.push_back(
        net.AddEdge(reviewer_node(p.reviewer), paper_node[slot], 0, 1, cost));
  }
  const int64_t lambda = instance.lambda();
  for (int node : paper_node) net.AddEdge(node, sink, lambda, lambda);
  net.set_demand(lambda * static_cast<int64_t>(a.papers.size()));
  return a;
}

enum class Gap { kNone, kIndustry, kAcademia, kSenior, kLocation, kDependency };

struct SetGap {
  Gap gap = Gap::kNone;
  int slot = -1;
  Continent continent = Continent::kEurope;
  int first = -1;   // pair indices of a dependent pair
  int second = -1;
};

// First unmet clause of the set in `slot`, checked in a fixed order.
SetGap FindViolation(const ConferenceInstance& instance,
                        const AssignmentNetwork& a, int slot,
                        const std::vector<int>& members) {
  SetGap v;
  v.slot = slot;
  bool industry = false, academia = false, senior = false;
  for (int p : members) {
    const Reviewer& r = instance.reviewer(a.pairs[p].reviewer);
    industry |= r.IndustryCapable();
    academia |= r.AcademiaCapable();
    senior |= r.IsSenior();
  }
  if (!industry) {
    v.gap = Gap::kIndustry;
    return v;
  }
  if (!academia) {
    v.gap = Gap::kAcademia;
    return v;
  }
  if (!senior) {
    v.gap = Gap::kSenior;
    return v;
  }
  for (int y = 0; y < kNumContinents; ++y) {
    const auto c = static_cast<Continent>(y);
    const bool all = std::all_of(members.begin(), members.end(), [&](int p) {
      return instance.reviewer(a.pairs[p].reviewer).locations.Contains(c);
    });
    if (all) {
      v.gap = Gap::kLocation;
      v.continent = c;
      return v;
    }
  }
  for (size_t x = 0; x < members.size(); ++x) {
    for (size_t y = x + 1; y < members.size(); ++y) {
      if (instance.dep()(a.pairs[members[x]].reviewer,
                         a.pairs[members[y]].reviewer)) {
        v.gap = Gap::kDependency;
        v.first = members[x];
        v.second = members[y];
        return v;
      }
    }
  }
  return v;
}

bool Closes(const Reviewer& r, const SetGap& v) {
  switch (v.gap) {
    case Gap::kIndustry:
      return r.IndustryCapable();
    case Gap::kAcademia:
      return r.AcademiaCapable();
    case Gap::kSenior:
      return r.IsSenior();
    case Gap::kLocation:
      return !r.locations.Contains(v.continent);
    default:
      return false;
  }
}

}  // namespace

SubResult SolveAssignment(const ConferenceInstance& instance,
                          const PairSet& pairs, std::span<const int> mu_lower,
                          std::span<const int> mu_upper,
                          const SubroutineConfig& config) {
  SubResult out;
  const auto& subs = instance.submissions();

  // Relaxation on the diversity network; it also prunes search nodes.
  BuiltNetwork built = BuildNetwork(instance, pairs, mu_lower, mu_upper, false);
  {
    const FlowOutcome relaxed = FeasibleFlow(built.network);
    if (!IsFeasible(relaxed)) {
      const NetworkLayout& layout = built.layout;
      std::vector<int> slot_of_node(built.network.num_nodes(), -1);
      for (size_t s = 0; s < layout.papers.size(); ++s) {
        slot_of_node[layout.paper_nodes[s]] = static_cast<int>(s);
        for (int node : layout.diversity_nodes[s]) {
          slot_of_node[node] = static_cast<int>(s);
        }
      }
      const Infeasible& cert = std::get<Infeasible>(relaxed);
      std::set<int> blamed;
      for (int v : cert.starved) {
        if (v >= 0 && v < static_cast<int>(slot_of_node.size()) &&
            slot_of_node[v] >= 0) {
          blamed.insert(slot_of_node[v]);
        }
      }
      for (int s : blamed) {
        out.blamed_papers.push_back(subs[layout.papers[s]].id);
      }
      out.complete = true;
      out.nodes = 1;
      out.reason = "diversity network infeasible: " + cert.reason;
      return out;
    }
  }

  const bool optimize = config.optimize_similarity;
  AssignmentNetwork a =
      BuildAssignmentNetwork(instance, pairs, mu_lower, mu_upper, optimize);
  const int num_papers = static_cast<int>(a.papers.size());
  const int num_pairs = static_cast<int>(a.pairs.size());
  std::vector<EdgeState> state(num_pairs, EdgeState::kFree);

  auto paper_has_set = [&](int slot) {
    std::vector<int> candidates, forced;
    for (int p : a.pairs_of_slot[slot]) {
      const int k = a.pairs[p].reviewer;
      if (state[p] == EdgeState::kForced) forced.push_back(k);
      if (state[p] != EdgeState::kForbidden) candidates.push_back(k);
    }
    return HasValidReviewerSet(instance, candidates, forced);
  };
  for (int s = 0; s < num_papers; ++s) {
    if (!paper_has_set(s)) out.blamed_papers.push_back(subs[a.papers[s]].id);
  }
  if (!out.blamed_papers.empty()) {
    out.complete = true;
    out.reason = "no diverse independent reviewer set for " +
                 std::to_string(out.blamed_papers.size()) + " paper(s)";
    return out;
  }

  std::vector<int> relaxed_edge(num_pairs);
  for (int p = 0; p < num_pairs; ++p) {
    const auto& decisions = built.layout.decisions;
    const auto it = std::lower_bound(
        decisions.begin(), decisions.end(), a.pairs[p],
        [](const DecisionNode& d, const ReviewerPaper& rp) { return d.pair < rp; });
    relaxed_edge[p] = it->edge;
  }
  auto apply = [&](const std::vector<Fix>& fixes, bool set) {
    for (const Fix& f : fixes) {
      const EdgeState st = set ? f.state : EdgeState::kFree;
      state[f.decision] = st;
      const int edge = a.pair_edges[f.decision];
      const int relaxed = relaxed_edge[f.decision];
      if (st == EdgeState::kForced) {
        a.net.SetBounds(edge, 1, 1);
        built.network.SetBounds(relaxed, kFlowScale, kFlowScale);
      } else if (st == EdgeState::kForbidden) {
        a.net.SetBounds(edge, 0, 0);
        built.network.SetBounds(relaxed, 0, 0);
      } else {
        a.net.SetBounds(edge, 0, 1);
        built.network.SetBounds(relaxed, 0, kFlowScale);
      }
    }
  };
  auto sim = [&](int p) {
    return instance.similarity(a.pairs[p].reviewer, a.pairs[p].paper);
  };

  std::vector<std::vector<int>> pairs_of_reviewer(instance.pool_size());
  for (int p = 0; p < num_pairs; ++p) {
    pairs_of_reviewer[a.pairs[p].reviewer].push_back(p);
  }
  const int lambda = instance.lambda();
  std::vector<SetGap> requirements(3);
  requirements[0].gap = Gap::kIndustry;
  requirements[1].gap = Gap::kAcademia;
  requirements[2].gap = Gap::kSenior;
  for (int y = 0; y < kNumContinents; ++y) {
    SetGap r;
    r.gap = Gap::kLocation;
    r.continent = static_cast<Continent>(y);
    requirements.push_back(r);
  }
  // Adds the fixes implied by `fixes` (sole candidates, full or exactly
  // met loads, dependents of forced members). False on a contradiction.
  auto propagate = [&](std::vector<Fix>& fixes) {
    bool changed = true;
    auto fix = [&](int p, EdgeState st) {
      fixes.push_back({p, st});
      apply({fixes.back()}, true);
      changed = true;
    };
    auto reviewer_of = [&](int p) -> const Reviewer& {
      return instance.reviewer(a.pairs[p].reviewer);
    };
    while (changed) {
      changed = false;
      for (int s = 0; s < num_papers; ++s) {
        const std::vector<int>& slot = a.pairs_of_slot[s];
        int forced = 0, open = 0;
        for (int p : slot) {
          forced += state[p] == EdgeState::kForced;
          open += state[p] != EdgeState::kForbidden;
        }
        if (forced > lambda || open < lambda) return false;
        if (open == lambda && forced < lambda) {
          for (int p : slot) {
            if (state[p] == EdgeState::kFree) fix(p, EdgeState::kForced);
          }
        }
        for (const SetGap& req : requirements) {
          int only = -1, count = 0;
          bool met = false;
          for (int p : slot) {
            if (state[p] == EdgeState::kForbidden || !Closes(reviewer_of(p), req)) {
              continue;
            }
            if (state[p] == EdgeState::kForced) {
              met = true;
              break;
            }
            ++count;
            only = p;
          }
          if (met) continue;
          if (count == 0) return false;
          if (count == 1) fix(only, EdgeState::kForced);
        }
        for (int p : slot) {
          if (state[p] != EdgeState::kForced) continue;
          for (int q : slot) {
            if (q == p || state[q] == EdgeState::kForbidden ||
                !instance.dep()(a.pairs[p].reviewer, a.pairs[q].reviewer)) {
              continue;
            }
            if (state[q] == EdgeState::kForced) return false;
            fix(q, EdgeState::kForbidden);
          }
        }
      }
      for (int k = 0; k < instance.pool_size(); ++k) {
        const std::vector<int>& mine = pairs_of_reviewer[k];
        if (mine.empty()) continue;
        int forced = 0, open = 0;
        for (int p : mine) {
          forced += state[p] == EdgeState::kForced;
          open += state[p] != EdgeState::kForbidden;
        }
        if (forced > mu_upper[k] || open < mu_lower[k]) return false;
        if (forced == mu_upper[k] && open > forced) {
          for (int p : mine) {
            if (state[p] == EdgeState::kFree) fix(p, EdgeState::kForbidden);
          }
        } else if (open == mu_lower[k] && forced < open) {
          for (int p : mine) {
            if (state[p] == EdgeState::kFree) fix(p, EdgeState::kForced);
          }
        }
      }
    }
    return true;
  };

  int64_t best_cost = std::numeric_limits<int64_t>::max();
  std::optional<std::vector<char>> best;  // chosen pairs
  bool cut_short = false;
  int improved_at = 0;
  std::set<std::string> dependency_papers;

  // The first pass is deterministic. If it runs out of nodes with neither an
  // assignment nor a proof, the rest of the budget goes to short restarts
  // with jittered candidate choice.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(0.5, 1.5);
  bool randomized = false;
  int pass_limit = std::max(1, config.max_nodes / 4);
  int restart_budget = 50;
  std::vector<SearchNode> stack;
  std::vector<Fix> applied;
  for (;;) {
  bool pass_cut = false;
  stack.assign(1, SearchNode{});
  while (!stack.empty()) {
    if (out.nodes >= pass_limit ||
        (best && out.nodes - improved_at >= config.stall_nodes)) {
      pass_cut = true;
      break;
    }
    SearchNode node = std::move(stack.back());
    stack.pop_back();
    ++out.nodes;
    apply(applied, false);
    apply(node.fixes, true);
    const bool consistent = propagate(node.fixes);
    applied = node.fixes;
    if (!consistent) continue;

    if (!node.fixes.empty()) {
      const int slot =
          a.slot_of_paper[a.pairs[node.fixes.back().decision].paper];
      if (!paper_has_set(slot)) continue;
    }
    // Feasibility mode steers by the diversity relaxation, optimisation by
    // similarity.
    std::vector<int64_t> guide;
    if (!optimize) {
      FlowOutcome relaxed = FeasibleFlow(built.network);
      if (!IsFeasible(relaxed)) continue;
      guide = std::move(std::get<FlowResult>(relaxed).flow);
    }

    std::vector<char> in(num_pairs, 0);
    int64_t cost = 0;
    if (optimize) {
      const FlowOutcome outcome = MinCostFeasibleFlow(a.net);
      if (!IsFeasible(outcome)) continue;
      const FlowResult& flow = std::get<FlowResult>(outcome);
      if (flow.cost >= best_cost) continue;
      cost = flow.cost;
      for (int p = 0; p < num_pairs; ++p) in[p] = flow.flow[a.pair_edges[p]] == 1;
    } else {
      // Round the relaxation: the assignment flow closest to it.
      for (int p = 0; p < num_pairs; ++p) {
        a.net.SetCost(a.pair_edges[p], kFlowScale - guide[relaxed_edge[p]]);
      }
      const FlowOutcome outcome = MinCostFeasibleFlow(a.net);
      if (!IsFeasible(outcome)) continue;
      const FlowResult& flow = std::get<FlowResult>(outcome);
      for (int p = 0; p < num_pairs; ++p) in[p] = flow.flow[a.pair_edges[p]] == 1;
    }

    SetGap v;
    for (int s = 0; s < num_papers && v.gap == Gap::kNone; ++s) {
      std::vector<int> members;
      for (int p : a.pairs_of_slot[s]) {
        if (in[p]) members.push_back(p);
      }
      v = FindViolation(instance, a, s, members);
    }

    if (v.gap == Gap::kNone) {
      best_cost = cost;
      best = std::move(in);
      improved_at = out.nodes;
      if (!optimize) break;
      continue;
    }
    if (v.gap == Gap::kDependency) {
      out.repair_fired = true;
      dependency_papers.insert(subs[a.papers[v.slot]].id);
      int repairs = 0;
      for (const Fix& f : node.fixes) {
        repairs += f.dependency && a.pairs[f.decision].paper == a.papers[v.slot];
      }
      if (repairs >= config.dependency_repair_retries) {
        pass_cut = true;
        continue;
      }
      // Explored first: forbid the lower-similarity member.
      int first = v.first, second = v.second;
      if (sim(second) < sim(first)) std::swap(first, second);
      if (randomized && jitter(rng) > 1.0) std::swap(first, second);
      for (int p : {second, first}) {
        if (state[p] == EdgeState::kForced) continue;
        SearchNode child{node.fixes};
        child.fixes.push_back({p, EdgeState::kForbidden, true});
        stack.push_back(std::move(child));
      }
      continue;
    }
    // Free candidate able to close the gap that the relaxation leans on
    // most, then the most similar.
    int pick = -1;
    double pick_score = 0.0;
    for (int p : a.pairs_of_slot[v.slot]) {
      if (state[p] != EdgeState::kFree || in[p]) continue;
      if (!Closes(instance.reviewer(a.pairs[p].reviewer), v)) continue;
      double score = optimize ? sim(p) : static_cast<double>(guide[relaxed_edge[p]]);
      if (randomized) score = (score + 1.0) * jitter(rng);
      if (pick < 0 || score > pick_score ||
          (score == pick_score && sim(p) > sim(pick))) {
        pick = p;
        pick_score = score;
      }
    }
    if (pick < 0) continue;
    SearchNode forbid{node.fixes};
    forbid.fixes.push_back({pick, EdgeState::kForbidden});
    SearchNode force{std::move(node.fixes)};
    force.fixes.push_back({pick, EdgeState::kForced});
    stack.push_back(std::move(forbid));
    stack.push_back(std::move(force));
  }
  if (best || !pass_cut || out.nodes >= config.max_nodes) {
    cut_short = pass_cut;
    break;
  }
  randomized = true;
  pass_limit = std::min(config.max_nodes, out.nodes + restart_budget);
  restart_budget += restart_budget / 2;
  }
  out.complete = !cut_short;

  if (!best) {
    out.blamed_papers.assign(dependency_papers.begin(), dependency_papers.end());
    out.reason = cut_short ? "search budget exhausted without an assignment"
                           : "no assignment satisfies every constraint";
    out.reason += " (" + std::to_string(out.nodes) + " nodes)";
    return out;
  }
  out.feasible = true;
  out.assignment.lambda = instance.lambda();
  for (int j : a.papers) out.assignment.sets[subs[j].id];
  for (int p = 0; p < num_pairs; ++p) {
    if (!(*best)[p]) continue;
    const ReviewerPaper& rp = a.pairs[p];
    out.assignment.sets[subs[rp.paper].id].push_back(
        instance.reviewer(rp.reviewer).id);
    out.assignment.objective += TransformF(sim(p));
    out.scaled_objective -= DecisionUnitCost(sim(p));
  }
  out.objective = out.assignment.objective;
  if (cut_short) {
    spdlog::debug("assignment search stopped after {} nodes", out.nodes);
  }
  return out;
}

}  // namespace revcover

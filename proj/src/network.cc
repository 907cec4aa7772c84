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

#include <algorithm>
#include <cmath>
#include <string>

#include "revcover/textsim.h"

namespace revcover {

bool PairSet::Contains(ReviewerPaper p) const {
  return std::binary_search(allowed.begin(), allowed.end(), p);
}

void PairSet::Normalize() {
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::sort(papers.begin(), papers.end());
  papers.erase(std::unique(papers.begin(), papers.end()), papers.end());
}

PairSet MakePairSet(const ConferenceInstance& instance,
                    std::span<const int> reviewers, std::span<const int> papers,
                    double theta) {
  PairSet out;
  out.papers.assign(papers.begin(), papers.end());
  for (int r : reviewers) {
    for (int j : papers) {
      const double s = instance.similarity(r, j);
      if (s != SimilarityMatrix::kConflict && s >= theta) {
        out.allowed.push_back({r, j});
      }
    }
  }
  out.Normalize();
  return out;
}

int64_t DecisionUnitCost(double similarity) {
  // f grows without bound as s -> 1; clamp to f(1) so costs stay in range.
  const double f = std::min(TransformF(similarity), TransformF(1.0));
  return -static_cast<int64_t>(std::llround(f * kCostScale));
}

BuiltNetwork BuildNetwork(const ConferenceInstance& instance,
                          const PairSet& pairs, std::span<const int> mu_lower,
                          std::span<const int> mu_upper, bool with_costs) {
  const int pool = instance.pool_size();
  if (static_cast<int>(mu_lower.size()) != pool ||
      static_cast<int>(mu_upper.size()) != pool) {
    throw NetworkBuildError("bound vectors must be pool-indexed");
  }
  const int64_t lambda = instance.lambda();
  if (lambda > 1'000'000 ||
      static_cast<int64_t>(pairs.papers.size()) > 100'000'000 / lambda) {
    throw NetworkBuildError("lambda x |papers| overflows the flow scale");
  }

  BuiltNetwork built;
  BoundedFlowNetwork& net = built.network;
  NetworkLayout& layout = built.layout;
  layout.lambda = static_cast<int>(lambda);

  std::vector<bool> active(pool, false);
  for (const ReviewerPaper& p : pairs.allowed) {
    if (p.reviewer < 0 || p.reviewer >= pool) {
      throw NetworkBuildError("pair references an unknown reviewer");
    }
    active[p.reviewer] = true;
  }
  for (int k = 0; k < pool; ++k) {
    if (mu_lower[k] > 0) active[k] = true;
  }
  std::vector<bool> continent_present(kNumContinents, false);
  for (int k = 0; k < pool; ++k) {
    if (!active[k]) continue;
    const Reviewer& r = instance.reviewer(k);
    if (r.locations.empty()) {
      throw NetworkBuildError("reviewer '" + r.id + "' has no location");
    }
    for (Continent c : r.locations.ToVector()) {
      continent_present[static_cast<int>(c)] = true;
    }
  }

  layout.source = net.AddNode("source");
  net.set_source(layout.source);

  std::vector<int> node_of_reviewer(pool, -1);
  for (int k = 0; k < pool; ++k) {
    if (!active[k]) continue;
    const Reviewer& r = instance.reviewer(k);
    const int node = net.AddNode("r:" + r.id);
    node_of_reviewer[k] = node;
    layout.reviewers.push_back(k);
    layout.reviewer_nodes.push_back(node);
    layout.source_edges.push_back(
        net.AddEdge(layout.source, node, kFlowScale * mu_lower[k],
                    kFlowScale * mu_upper[k]));
  }

  std::vector<int> paper_slot(instance.num_submissions(), -1);
  for (int j : pairs.papers) {
    if (j < 0 || j >= instance.num_submissions()) {
      throw NetworkBuildError("pair set references an unknown submission");
    }
    const std::string& id = instance.submissions()[j].id;
    paper_slot[j] = static_cast<int>(layout.papers.size());
    layout.papers.push_back(j);
    std::array<int, kDiversityNodesPerPaper> block{};
    static constexpr std::array<const char*, 3> kBg = {"a0", "a1", "a2"};
    for (int x = 0; x < 3; ++x) {
      block[diversity_slot::kIndustry + x] =
          net.AddNode(std::string(kBg[x]) + ":" + id);
    }
    for (int y = 0; y < kNumContinents; ++y) {
      block[diversity_slot::kPresent + y] =
          net.AddNode("l" + std::to_string(y) + ":" + id);
      block[diversity_slot::kAbsent + y] =
          net.AddNode("l" + std::to_string(y) + "':" + id);
    }
    for (int x = 0; x < kNumSeniorityLevels; ++x) {
      block[diversity_slot::kSenior + x] =
          net.AddNode("s" + std::to_string(x) + ":" + id);
    }
    layout.diversity_nodes.push_back(block);
    layout.paper_nodes.push_back(net.AddNode("m:" + id));
  }

  layout.sink = net.AddNode("sink");
  net.set_sink(layout.sink);

  for (const ReviewerPaper& p : pairs.allowed) {
    const int slot = paper_slot[p.paper];
    if (slot < 0) {
      throw NetworkBuildError("pair references a paper outside the scope");
    }
    const Reviewer& r = instance.reviewer(p.reviewer);
    const int64_t cost =
        with_costs ? DecisionUnitCost(instance.similarity(p.reviewer, p.paper))
                   : 0;
    const int node = net.AddNode("d:" + r.id + "/" +
                                 instance.submissions()[p.paper].id);
    const int edge = net.AddEdge(node_of_reviewer[p.reviewer], node, 0,
                                 kFlowScale, cost);
    layout.decisions.push_back({p, node, edge});

    const auto& block = layout.diversity_nodes[slot];
    int bg = diversity_slot::kAcademia;
    if (r.background == Background::kIndustry) bg = diversity_slot::kIndustry;
    if (r.background == Background::kBoth) bg = diversity_slot::kBoth;
    net.AddEdge(node, block[bg], 0, kBackgroundUnits);
    for (int y = 0; y < kNumContinents; ++y) {
      const bool present = r.locations.Contains(static_cast<Continent>(y));
      net.AddEdge(node,
                  block[(present ? diversity_slot::kPresent
                                 : diversity_slot::kAbsent) +
                        y],
                  0, kLocationUnits);
    }
    net.AddEdge(node,
                block[diversity_slot::kSenior + static_cast<int>(r.seniority)],
                0, kSeniorityUnits);
  }

  const int64_t all_but_one = lambda - 1;
  for (size_t slot = 0; slot < layout.papers.size(); ++slot) {
    const auto& block = layout.diversity_nodes[slot];
    const int paper = layout.paper_nodes[slot];
    net.AddEdge(block[diversity_slot::kIndustry], paper, 0,
                kBackgroundUnits * all_but_one);
    net.AddEdge(block[diversity_slot::kAcademia], paper, 0,
                kBackgroundUnits * all_but_one);
    net.AddEdge(block[diversity_slot::kBoth], paper, 0,
                kBackgroundUnits * lambda);
    for (int y = 0; y < kNumContinents; ++y) {
      net.AddEdge(block[diversity_slot::kPresent + y], paper, 0,
                  kLocationUnits * all_but_one);
      net.AddEdge(block[diversity_slot::kAbsent + y], paper,
                  continent_present[y] ? kLocationUnits : 0,
                  kLocationUnits * lambda);
    }
    net.AddEdge(block[diversity_slot::kSenior], paper, kSeniorityUnits,
                kSeniorityUnits * lambda);
    net.AddEdge(block[diversity_slot::kSenior + 1], paper, 0,
                kSeniorityUnits * all_but_one);
    net.AddEdge(block[diversity_slot::kSenior + 2], paper, 0,
                kSeniorityUnits * all_but_one);
    net.AddEdge(paper, layout.sink, kFlowScale * lambda, kFlowScale * lambda);
  }
  net.set_demand(kFlowScale * lambda *
                 static_cast<int64_t>(layout.papers.size()));
  return built;
}

Assignment ExtractAssignment(const FlowResult& result,
                             const NetworkLayout& layout,
                             const ConferenceInstance& instance) {
  Assignment out;
  out.lambda = layout.lambda;
  for (int j : layout.papers) out.sets[instance.submissions()[j].id];
  for (const DecisionNode& d : layout.decisions) {
    const int64_t f = result.flow.at(d.edge);
    if (f == 0) continue;
    if (f != layout.scale) {
      throw std::logic_error("decision edge carries partial flow " +
                             std::to_string(f));
    }
    const double s = instance.similarity(d.pair.reviewer, d.pair.paper);
    out.sets[instance.submissions()[d.pair.paper].id].push_back(
        instance.reviewer(d.pair.reviewer).id);
    out.objective += TransformF(s);
  }
  for (const auto& [id, members] : out.sets) {
    if (static_cast<int>(members.size()) != layout.lambda) {
      throw std::logic_error("paper '" + id + "' received " +
                             std::to_string(members.size()) + " reviewers");
    }
  }
  return out;
}

}  // namespace revcover

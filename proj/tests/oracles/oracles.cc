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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace revcover::oracle {

namespace {

double F(double s) { return s < 1.0 ? 1.0 / (1.0 - s) : 1e6; }

int64_t Scaled(double s) { return std::llround(F(s) * 1e4); }

}  // namespace

std::optional<int64_t> MinCostByEnumeration(const BoundedFlowNetwork& net) {
  const int m = net.num_edges();
  std::vector<int64_t> balance(net.num_nodes(), 0);
  std::optional<int64_t> best;
  std::function<void(int, int64_t)> walk = [&](int e, int64_t cost) {
    if (e == m) {
      for (int v = 0; v < net.num_nodes(); ++v) {
        if (v == net.source() || v == net.sink()) continue;
        if (balance[v] != 0) return;
      }
      const int64_t out = -balance[net.source()];
      if (balance[net.sink()] != out) return;
      if (net.demand() && out != *net.demand()) return;
      if (!best || cost < *best) best = cost;
      return;
    }
    const FlowEdge& edge = net.edge(e);
    for (int64_t f = edge.lower; f <= edge.capacity; ++f) {
      balance[edge.from] -= f;
      balance[edge.to] += f;
      walk(e + 1, cost + f * edge.cost);
      balance[edge.from] += f;
      balance[edge.to] -= f;
    }
  };
  walk(0, 0);
  return best;
}

int64_t MinCutByEnumeration(const BoundedFlowNetwork& net) {
  const int n = net.num_nodes();
  int64_t best = std::numeric_limits<int64_t>::max();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> net.source() & 1) || (mask >> net.sink() & 1)) continue;
    int64_t cut = 0;
    for (const FlowEdge& e : net.edges()) {
      if ((mask >> e.from & 1) && !(mask >> e.to & 1)) cut += e.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

bool SetDiverse(std::span<const Reviewer* const> members) {
  bool industry = false, academia = false, senior = false;
  for (const Reviewer* r : members) {
    industry |= r->background != Background::kAcademia;
    academia |= r->background != Background::kIndustry;
    senior |= r->seniority == Seniority::kSenior;
  }
  if (!industry || !academia || !senior) return false;
  for (int y = 0; y < kNumContinents; ++y) {
    bool someone_elsewhere = false;
    for (const Reviewer* r : members) {
      if (!r->locations.Contains(static_cast<Continent>(y))) {
        someone_elsewhere = true;
      }
    }
    if (!someone_elsewhere) return false;
  }
  return true;
}

BruteAssignment BestAssignment(const ConferenceInstance& instance,
                               const PairSet& pairs,
                               std::span<const int> mu_lower,
                               std::span<const int> mu_upper,
                               bool set_rules) {
  const int lambda = instance.lambda();
  // Valid sets per paper: (members, scaled, J).
  struct Option {
    std::vector<int> members;
    int64_t scaled;
    double J;
  };
  std::vector<std::vector<Option>> options;
  for (int j : pairs.papers) {
    std::vector<int> candidates;
    for (const ReviewerPaper& p : pairs.allowed) {
      if (p.paper == j) candidates.push_back(p.reviewer);
    }
    std::vector<Option> mine;
    std::vector<int> pick;
    std::function<void(size_t)> choose = [&](size_t next) {
      if (static_cast<int>(pick.size()) == lambda) {
        std::vector<const Reviewer*> members;
        for (int k : pick) members.push_back(&instance.reviewer(k));
        if (set_rules) {
          for (size_t a = 0; a < pick.size(); ++a) {
            for (size_t b = a + 1; b < pick.size(); ++b) {
              if (instance.dep()(pick[a], pick[b])) return;
            }
          }
          if (!SetDiverse(members)) return;
        }
        Option o{pick, 0, 0.0};
        for (int k : pick) {
          o.scaled += Scaled(instance.similarity(k, j));
          o.J += F(instance.similarity(k, j));
        }
        mine.push_back(std::move(o));
        return;
      }
      for (size_t i = next; i < candidates.size(); ++i) {
        pick.push_back(candidates[i]);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
    options.push_back(std::move(mine));
  }

  BruteAssignment best;
  std::vector<int> load(instance.pool_size(), 0);
  std::vector<int> chosen(options.size(), -1);
  std::function<void(size_t, int64_t, double)> walk = [&](size_t i,
                                                          int64_t scaled,
                                                          double J) {
    if (i == options.size()) {
      for (int k = 0; k < instance.pool_size(); ++k) {
        if (load[k] < mu_lower[k]) return;
      }
      if (best.feasible &&
          (scaled < best.scaled || (scaled == best.scaled && J <= best.J))) {
        return;
      }
      best.feasible = true;
      best.scaled = scaled;
      best.J = J;
      best.assignment = Assignment{};
      best.assignment.lambda = lambda;
      for (size_t p = 0; p < options.size(); ++p) {
        auto& set = best.assignment.sets
                        [instance.submissions()[pairs.papers[p]].id];
        for (int k : options[p][chosen[p]].members) {
          set.push_back(instance.reviewer(k).id);
        }
      }
      best.assignment.objective = J;
      return;
    }
    for (size_t o = 0; o < options[i].size(); ++o) {
      const Option& opt = options[i][o];
      bool fits = true;
      for (int k : opt.members) fits &= load[k] < mu_upper[k];
      if (!fits) continue;
      for (int k : opt.members) ++load[k];
      chosen[i] = static_cast<int>(o);
      walk(i + 1, scaled + opt.scaled, J + opt.J);
      for (int k : opt.members) --load[k];
    }
  };
  walk(0, 0, 0.0);
  return best;
}

double TwoTermKl(double p0, double q0) {
  return p0 * std::log(p0 / q0) + (1 - p0) * std::log((1 - p0) / (1 - q0));
}

double Dcg(std::span<const double> relevance) {
  double dcg = 0.0;
  for (size_t i = 0; i < relevance.size(); ++i) {
    dcg += relevance[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

double FairnessByLoop(const Assignment& assignment,
                      const ConferenceInstance& instance) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [paper, members] : assignment.sets) {
    const int j = *instance.FindSubmission(paper);
    double sum = 0.0;
    for (const auto& id : members) {
      sum += F(instance.similarity(*instance.FindReviewer(id), j));
    }
    best = std::min(best, sum);
  }
  return best;
}

}  // namespace revcover::oracle

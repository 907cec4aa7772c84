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

#include "revcover/baselines.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "revcover/textsim.h"

namespace revcover {

std::string_view ToString(BaselineKind kind) {
  return kind == BaselineKind::kGreedy ? "greedy" : "iterative-worst-off";
}

std::optional<BaselineKind> ParseBaselineKind(std::string_view s) {
  if (s == "greedy") return BaselineKind::kGreedy;
  if (s == "iterative-worst-off") return BaselineKind::kIterativeWorstOff;
  return std::nullopt;
}

namespace {

int NumPc(const ConferenceInstance& instance, std::span<const int> mu_upper) {
  const int n = static_cast<int>(instance.pc().size());
  if (static_cast<int>(mu_upper.size()) != n) {
    throw std::invalid_argument("mu_upper must be indexed like the PC");
  }
  return n;
}

// PC reviewers of paper j without conflicts, most similar first.
std::vector<int> RankedReviewers(const ConferenceInstance& instance, int j) {
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(instance.pc().size()); ++i) {
    if (!instance.sim_pc().IsConflict(i, j)) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.sim_pc()(a, j) > instance.sim_pc()(b, j);
  });
  return order;
}

// Fills paper j from `ranked` using `capacity`; empty on a dead end.
std::vector<int> TakeBest(const std::vector<int>& ranked,
                          std::vector<int>& capacity, int lambda) {
  std::vector<int> set;
  for (int i : ranked) {
    if (static_cast<int>(set.size()) == lambda) break;
    if (capacity[i] > 0) set.push_back(i);
  }
  if (static_cast<int>(set.size()) < lambda) return {};
  for (int i : set) --capacity[i];
  return set;
}

double SetSum(const ConferenceInstance& instance, const std::vector<int>& set,
              int j) {
  double sum = 0.0;
  for (int i : set) sum += TransformF(instance.sim_pc()(i, j));
  return sum;
}

}  // namespace

Assignment GreedyAssign(const ConferenceInstance& instance,
                        std::span<const int> mu_upper) {
  NumPc(instance, mu_upper);
  std::vector<int> capacity(mu_upper.begin(), mu_upper.end());
  Assignment out;
  out.lambda = instance.lambda();
  out.provenance = "greedy";
  for (int j = 0; j < instance.num_submissions(); ++j) {
    const auto set =
        TakeBest(RankedReviewers(instance, j), capacity, instance.lambda());
    const std::string& id = instance.submissions()[j].id;
    if (set.empty()) {
      throw BaselineError("greedy: capacity exhausted at paper '" + id + "'");
    }
    for (int i : set) out.sets[id].push_back(instance.pc()[i].id);
    out.objective += SetSum(instance, set, j);
  }
  return out;
}

Assignment IterativeWorstOff(const ConferenceInstance& instance,
                             std::span<const int> mu_upper, int merges,
                             uint64_t seed, WorstOffTrace* trace) {
  NumPc(instance, mu_upper);
  if (merges < 1) throw std::invalid_argument("merges must be positive");
  const int m = instance.num_submissions();
  const int lambda = instance.lambda();
  std::vector<std::vector<int>> ranked(m);
  for (int j = 0; j < m; ++j) ranked[j] = RankedReviewers(instance, j);

  std::mt19937_64 rng(seed);
  std::vector<int> capacity(mu_upper.begin(), mu_upper.end());
  std::vector<int> unfixed(m);
  std::iota(unfixed.begin(), unfixed.end(), 0);
  std::map<int, std::vector<int>> fixed;
  std::map<int, std::vector<int>> carried;  // previous best, unfixed papers

  using Candidate = std::map<int, std::vector<int>>;
  auto fairness = [&](const Candidate& c) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [j, set] : c) worst = std::min(worst, SetSum(instance, set, j));
    return worst;
  };

  while (!unfixed.empty()) {
    std::vector<Candidate> candidates;
    if (!carried.empty()) candidates.push_back(carried);
    int stuck = -1;
    for (int t = 0; t < merges; ++t) {
      std::vector<int> order = unfixed;
      // The first fresh candidate keeps input order.
      if (t > 0 || !carried.empty()) std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> cap = capacity;
      Candidate c;
      bool ok = true;
      for (int j : order) {
        auto set = TakeBest(ranked[j], cap, lambda);
        if (set.empty()) {
          ok = false;
          if (stuck < 0) stuck = j;
          break;
        }
        c[j] = std::move(set);
      }
      if (ok) candidates.push_back(std::move(c));
    }
    if (candidates.empty()) {
      throw BaselineError("iterative-worst-off: no capacity left for paper '" +
                          instance.submissions()[stuck].id + "'");
    }
    size_t best = 0;
    double best_gamma = fairness(candidates[0]);
    for (size_t c = 1; c < candidates.size(); ++c) {
      const double g = fairness(candidates[c]);
      if (g > best_gamma) {
        best = c;
        best_gamma = g;
      }
    }
    Candidate& chosen = candidates[best];
    int worst = -1;
    double worst_sum = std::numeric_limits<double>::infinity();
    for (const auto& [j, set] : chosen) {
      const double s = SetSum(instance, set, j);
      if (s < worst_sum) {
        worst = j;
        worst_sum = s;
      }
    }
    for (int i : chosen[worst]) --capacity[i];
    fixed[worst] = chosen[worst];
    if (trace != nullptr) trace->fixed_sums.push_back(worst_sum);
    chosen.erase(worst);
    carried = std::move(chosen);
    std::erase(unfixed, worst);
  }

  Assignment out;
  out.lambda = lambda;
  out.provenance = "iterative-worst-off";
  for (const auto& [j, set] : fixed) {
    for (int i : set) {
      out.sets[instance.submissions()[j].id].push_back(instance.pc()[i].id);
    }
    out.objective += SetSum(instance, set, j);
  }
  return out;
}

}  // namespace revcover

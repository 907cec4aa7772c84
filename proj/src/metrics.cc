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

#include "revcover/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "spdlog/spdlog.h"

namespace revcover {

namespace {

int ResolveReviewer(const ConferenceInstance& instance, const std::string& id) {
  auto k = instance.FindReviewer(id);
  if (!k) throw MetricError("unknown reviewer '" + id + "'");
  return *k;
}

int ResolveSubmission(const ConferenceInstance& instance,
                      const std::string& id) {
  auto j = instance.FindSubmission(id);
  if (!j) throw MetricError("unknown submission '" + id + "'");
  return *j;
}

void RequireSets(const Assignment& assignment) {
  if (assignment.sets.empty()) throw MetricError("assignment has no sets");
}

}  // namespace

double Fairness(const Assignment& assignment,
                const ConferenceInstance& instance) {
  RequireSets(assignment);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [paper, members] : assignment.sets) {
    const int j = ResolveSubmission(instance, paper);
    double sum = 0.0;
    for (const auto& id : members) {
      sum += TransformF(instance.similarity(ResolveReviewer(instance, id), j));
    }
    worst = std::min(worst, sum);
  }
  return worst;
}

double TotalSimilarity(const Assignment& assignment,
                       const ConferenceInstance& instance) {
  double total = 0.0;
  for (const auto& [paper, members] : assignment.sets) {
    const int j = ResolveSubmission(instance, paper);
    for (const auto& id : members) {
      total += TransformF(instance.similarity(ResolveReviewer(instance, id), j));
    }
  }
  return total;
}

double AvgTextualDiversity(const Assignment& assignment,
                           const std::map<std::string, TermCounts>& profiles) {
  RequireSets(assignment);
  if (assignment.lambda < 2) {
    spdlog::warn("textual diversity needs two reviewers per set; reporting 0");
    return 0.0;
  }
  double total = 0.0;
  for (const auto& [paper, members] : assignment.sets) {
    double sum = 0.0;
    int pairs = 0;
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        auto pa = profiles.find(members[a]);
        auto pb = profiles.find(members[b]);
        if (pa == profiles.end() || pb == profiles.end()) {
          throw MetricError("no language model for a reviewer of '" + paper +
                            "'");
        }
        sum += SymmetricKl(pa->second, pb->second);
        ++pairs;
      }
    }
    if (pairs > 0) total += sum / pairs;
  }
  return total / static_cast<double>(assignment.sets.size());
}

double AvgTextualDiversity(const Assignment& assignment,
                           const ConferenceInstance& instance) {
  std::map<std::string, TermCounts> profiles;
  for (const auto& [paper, members] : assignment.sets) {
    for (const auto& id : members) {
      if (!profiles.contains(id)) {
        profiles.emplace(id, TermCounts::FromText(
                                 instance.reviewer(ResolveReviewer(instance, id))
                                     .profile_text));
      }
    }
  }
  return AvgTextualDiversity(assignment, profiles);
}

SetDiversity ScoreSet(std::span<const Reviewer* const> members) {
  const size_t n = members.size();
  if (n < 2) throw MetricError("location diversity needs two reviewers");
  SetDiversity out;
  int bg = 0;
  std::set<Seniority> levels;
  for (const Reviewer* r : members) {
    bg += static_cast<int>(r->background);
    levels.insert(r->seniority);
  }
  out.background = 1.0 - std::abs(bg) / static_cast<double>(n);
  double jaccard = 0.0;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      const int uni = members[a]->locations.UnionSize(members[b]->locations);
      if (uni > 0) {
        jaccard += members[a]->locations.IntersectionSize(members[b]->locations) /
                   static_cast<double>(uni);
      }
    }
  }
  out.location = 1.0 - jaccard / (n * (n - 1) / 2.0);
  out.seniority = levels.size() / 3.0;
  return out;
}

double Diversity(const Assignment& assignment,
                 const ConferenceInstance& instance) {
  RequireSets(assignment);
  double total = 0.0;
  for (const auto& [paper, members] : assignment.sets) {
    std::vector<const Reviewer*> resolved;
    for (const auto& id : members) {
      resolved.push_back(&instance.reviewer(ResolveReviewer(instance, id)));
    }
    total += ScoreSet(resolved).total();
  }
  return total / static_cast<double>(assignment.sets.size());
}

double DependencyPct(const Assignment& assignment,
                     const ConferenceInstance& instance) {
  RequireSets(assignment);
  int violated = 0;
  for (const auto& [paper, members] : assignment.sets) {
    std::vector<int> idx;
    for (const auto& id : members) idx.push_back(ResolveReviewer(instance, id));
    bool found = false;
    for (size_t a = 0; a < idx.size() && !found; ++a) {
      for (size_t b = a + 1; b < idx.size() && !found; ++b) {
        found = instance.dep()(idx[a], idx[b]);
      }
    }
    if (found) ++violated;
  }
  return 100.0 * violated / static_cast<double>(assignment.sets.size());
}

WorkloadStats Workload(const Assignment& assignment,
                       const ConferenceInstance& instance) {
  std::vector<int> load(instance.pool_size(), 0);
  int total = 0;
  for (const auto& [paper, members] : assignment.sets) {
    for (const auto& id : members) {
      ++load[ResolveReviewer(instance, id)];
      ++total;
    }
  }
  WorkloadStats out;
  int used = 0;
  int pc_size = 0;
  for (int k = 0; k < instance.pool_size(); ++k) {
    const bool in_pc = instance.IsPcIndex(k);
    if (load[k] > 0) ++used;
    if (in_pc || load[k] > 0 ||
        instance.reviewer(k).origin == Origin::kInserted) {
      ++pc_size;
    }
    if (in_pc && instance.reviewer(k).origin == Origin::kOriginalPc &&
        load[k] == 0) {
      ++out.unused_pc;
    }
  }
  if (used > 0) out.mean_per_used_reviewer = total / static_cast<double>(used);
  if (pc_size > 0) out.mean_per_pc_member = total / static_cast<double>(pc_size);
  return out;
}

AssignmentReport Evaluate(const Assignment& assignment,
                          const ConferenceInstance& instance) {
  AssignmentReport r;
  const WorkloadStats w = Workload(assignment, instance);
  r.mean_workload_per_used_reviewer = w.mean_per_used_reviewer;
  r.mean_workload_per_pc_member = w.mean_per_pc_member;
  r.unused_pc_count = w.unused_pc;
  r.fairness = Fairness(assignment, instance);
  r.avg_kl = AvgTextualDiversity(assignment, instance);
  r.div = Diversity(assignment, instance);
  r.dep_pct = DependencyPct(assignment, instance);
  r.J = TotalSimilarity(assignment, instance);
  return r;
}

double Ndcg(std::span<const double> relevance) {
  if (relevance.empty()) throw MetricError("NDCG of an empty ranking");
  auto dcg = [](std::span<const double> rel) {
    double sum = 0.0;
    for (size_t i = 0; i < rel.size(); ++i) {
      sum += rel[i] / std::log2(static_cast<double>(i) + 2.0);
    }
    return sum;
  };
  std::vector<double> ideal(relevance.begin(), relevance.end());
  for (double r : ideal) {
    if (r < 0.0) throw MetricError("negative relevance grade");
  }
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double best = dcg(ideal);
  if (best == 0.0) {
    spdlog::warn("all relevance grades are zero; NDCG reported as 0");
    return 0.0;
  }
  return dcg(relevance) / best;
}

}  // namespace revcover

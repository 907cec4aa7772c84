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

#include "revcover/divers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "revcover/metrics.h"
#include "revcover/network.h"
#include "revcover/parallel.h"
#include "spdlog/spdlog.h"

namespace revcover {

namespace {

constexpr uint64_t kSampleStream = 1;
constexpr uint64_t kTryStream = 2;

uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> ActiveList(const Scope& scope) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(scope.active.size()); ++k) {
    if (scope.active[k]) out.push_back(k);
  }
  return out;
}

int EligibleCount(const ConferenceInstance& instance, const Scope& scope,
                  int paper, double theta) {
  int n = 0;
  for (int k = 0; k < instance.pool_size(); ++k) {
    if (scope.active[k] && Eligible(instance, k, paper, theta)) ++n;
  }
  return n;
}

// Mean similarity to all submissions, conflicts counted as 0.
double AverageSimilarity(const ConferenceInstance& instance, int pool) {
  double sum = 0.0;
  for (int j = 0; j < instance.num_submissions(); ++j) {
    sum += std::max(instance.similarity(pool, j), 0.0);
  }
  return instance.num_submissions() > 0 ? sum / instance.num_submissions()
                                        : 0.0;
}

enum Attribute { kAny, kSenior, kIndustry, kAcademia };

bool Carries(const Reviewer& r, Attribute a) {
  switch (a) {
    case kAny:
      return true;
    case kSenior:
      return r.IsSenior();
    case kIndustry:
      return r.IndustryCapable();
    case kAcademia:
      return r.AcademiaCapable();
  }
  return false;
}

const char* AttributeName(Attribute a) {
  switch (a) {
    case kAny:
      return "total";
    case kSenior:
      return "senior";
    case kIndustry:
      return "industry-capable";
    case kAcademia:
      return "academia-capable";
  }
  return "";
}

int64_t Capacity(const ConferenceInstance& instance, const Scope& scope,
                 const std::vector<int>& mu_upper, Attribute a) {
  int64_t cap = 0;
  for (int k = 0; k < instance.pool_size(); ++k) {
    if (scope.active[k] && Carries(instance.reviewer(k), a)) cap += mu_upper[k];
  }
  return cap;
}

std::string Describe(const Reviewer& r) {
  std::string bg;
  switch (r.background) {
    case Background::kIndustry:
      bg = "industry background";
      break;
    case Background::kAcademia:
      bg = "academia background";
      break;
    case Background::kBoth:
      bg = "non-academia and academia background";
      break;
  }
  std::string where;
  for (Continent c : r.locations.ToVector()) {
    if (!where.empty()) where += ", ";
    where += DisplayName(c);
  }
  return std::string(ToString(r.seniority)) + ", " + bg + ", " + where;
}

PairSet BuildPairs(const ConferenceInstance& instance, const Scope& scope,
                   const std::vector<int>& papers, double theta) {
  return MakePairSet(instance, ActiveList(scope), papers, theta);
}

}  // namespace

uint64_t StreamSeed(uint64_t seed, uint64_t stream, uint64_t index) {
  return SplitMix(SplitMix(SplitMix(seed) ^ stream) + index);
}

void ValidateMainConfig(const MainConfig& c) {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (!(c.theta >= 0.0 && c.theta < 1.0)) fail("theta must lie in [0, 1)");
  if (c.kappa < 1) fail("kappa must be positive");
  if (c.tries < 0) fail("tries must be non-negative");
  if (!(c.drop_pct >= 0.0 && c.drop_pct < 1.0)) {
    fail("drop_pct must lie in [0, 1)");
  }
  if (c.sample_runs < 1) fail("sample_runs must be positive");
  if (!(c.sample_drop_pct >= 0.0 && c.sample_drop_pct < 1.0)) {
    fail("sample_drop_pct must lie in [0, 1)");
  }
  if (c.mu_upper && *c.mu_upper < 0) fail("mu_upper must be non-negative");
  if (c.sub.dependency_repair_retries < 0) {
    fail("dependency_repair_retries must be non-negative");
  }
  if (c.sub.max_nodes < 1 || c.sub.stall_nodes < 1 ||
      c.sample_max_nodes < 1) {
    fail("node budgets must be positive");
  }
}

bool Eligible(const ConferenceInstance& instance, int pool, int paper,
              double theta) {
  const double s = instance.similarity(pool, paper);
  return s != SimilarityMatrix::kConflict && s >= theta;
}

std::vector<Suggestion> PreflightExtend(const ConferenceInstance& instance,
                                        Scope& scope,
                                        const std::vector<int>& mu_upper) {
  std::vector<Suggestion> inserted;
  const int64_t m = instance.num_submissions();
  const int64_t lambda = instance.lambda();
  const std::vector<std::pair<Attribute, int64_t>> checks = {
      {kAny, lambda * m}, {kSenior, m}, {kIndustry, m}, {kAcademia, m}};
  for (const auto& [attribute, need] : checks) {
    while (Capacity(instance, scope, mu_upper, attribute) < need) {
      int best = -1;
      double best_avg = -1.0;
      for (int k = static_cast<int>(instance.pc().size());
           k < instance.pool_size(); ++k) {
        if (scope.active[k] || mu_upper[k] <= 0 ||
            !Carries(instance.reviewer(k), attribute)) {
          continue;
        }
        const double avg = AverageSimilarity(instance, k);
        if (avg > best_avg) {
          best = k;
          best_avg = avg;
        }
      }
      if (best < 0) {
        throw DiversError(std::string("abilities of PC are not enough: ") +
                          AttributeName(attribute) + " capacity below " +
                          std::to_string(need) + " and the ERC is exhausted");
      }
      scope.active[best] = true;
      const Reviewer& r = instance.reviewer(best);
      inserted.push_back(
          {r.id, best_avg,
           r.name + " (" + Describe(r) + "): raises " +
               AttributeName(attribute) + " capacity of the PC",
           {}, 0});
    }
  }
  return inserted;
}

std::vector<std::string> ApplyTheta(const ConferenceInstance& instance,
                                    Scope& scope,
                                    const std::vector<int>& mu_lower,
                                    double theta) {
  std::vector<std::string> out_of_scope;
  std::vector<int> kept;
  for (int j : scope.papers) {
    bool reachable = false;
    for (int k = 0; k < instance.pool_size() && !reachable; ++k) {
      reachable = Eligible(instance, k, j, theta);
    }
    if (reachable) {
      kept.push_back(j);
    } else {
      out_of_scope.push_back(instance.submissions()[j].id);
    }
  }
  if (kept.empty()) throw DiversError("no assignable submissions");
  scope.papers = std::move(kept);
  for (int k = 0; k < instance.pool_size(); ++k) {
    if (!scope.active[k] || mu_lower[k] == 0) continue;
    int eligible = 0;
    for (int j : scope.papers) eligible += Eligible(instance, k, j, theta);
    if (mu_lower[k] > eligible) {
      spdlog::info("reviewer '{}' removed: lower bound {} exceeds {} eligible "
                   "papers",
                   instance.reviewer(k).id, mu_lower[k], eligible);
      scope.active[k] = false;
    }
  }
  return out_of_scope;
}

std::vector<ProblemPaper> IdentifyProblemPapers(
    const ConferenceInstance& instance, const Scope& scope,
    const std::vector<int>& mu_upper, const MainConfig& config,
    uint64_t stream) {
  const int lambda = instance.lambda();
  std::vector<ProblemPaper> few;
  std::vector<int> rest;
  std::vector<int> eligible_of(instance.num_submissions(), 0);
  for (int j : scope.papers) {
    const int n = EligibleCount(instance, scope, j, config.theta);
    eligible_of[j] = n;
    if (n < lambda) {
      few.push_back({instance.submissions()[j].id, 1.0, n});
    } else {
      rest.push_back(j);
    }
  }
  std::stable_sort(few.begin(), few.end(), [](const auto& a, const auto& b) {
    return a.eligible_reviewers < b.eligible_reviewers;
  });
  if (rest.empty()) return few;

  const std::vector<int> mu_lower(instance.pool_size(), 0);
  SubroutineConfig sub = config.sub;
  sub.optimize_similarity = false;
  sub.max_nodes = config.sample_max_nodes;
  std::vector<std::vector<int>> kept(config.sample_runs);
  std::vector<char> failed(config.sample_runs, 0);
  const std::vector<int> active = ActiveList(scope);
  ParallelFor(config.sample_runs, [&](int run) {
    std::mt19937_64 rng(StreamSeed(config.seed, kSampleStream,
                                   (stream << 20) + static_cast<uint64_t>(run)));
    std::bernoulli_distribution drop(config.sample_drop_pct);
    for (int j : rest) {
      if (!drop(rng)) kept[run].push_back(j);
    }
    if (kept[run].empty()) return;
    const PairSet pairs =
        MakePairSet(instance, active, kept[run], config.theta);
    failed[run] =
        !SolveAssignment(instance, pairs, mu_lower, mu_upper, sub).feasible;
  });

  std::vector<int> runs_with(instance.num_submissions(), 0);
  std::vector<int> failures(instance.num_submissions(), 0);
  for (int run = 0; run < config.sample_runs; ++run) {
    for (int j : kept[run]) {
      ++runs_with[j];
      failures[j] += failed[run];
    }
  }
  std::vector<ProblemPaper> sampled;
  for (int j : rest) {
    if (failures[j] == 0) continue;
    sampled.push_back({instance.submissions()[j].id,
                       static_cast<double>(failures[j]) / runs_with[j],
                       eligible_of[j]});
  }
  std::stable_sort(sampled.begin(), sampled.end(),
                   [](const auto& a, const auto& b) {
                     return a.failure_probability > b.failure_probability;
                   });
  few.insert(few.end(), sampled.begin(), sampled.end());
  return few;
}

std::vector<Suggestion> ExtendPc(const ConferenceInstance& instance,
                                 Scope& scope, const std::vector<int>& mu_upper,
                                 const std::vector<int>& targets,
                                 const MainConfig& config, int iteration) {
  const int64_t m = static_cast<int64_t>(scope.papers.size());
  const bool senior_scarce = Capacity(instance, scope, mu_upper, kSenior) < m;
  const bool industry_scarce =
      Capacity(instance, scope, mu_upper, kIndustry) < m;
  const bool academia_scarce =
      Capacity(instance, scope, mu_upper, kAcademia) < m;
  ContinentSet covered;
  for (int k = 0; k < instance.pool_size(); ++k) {
    if (!scope.active[k]) continue;
    for (Continent c : instance.reviewer(k).locations.ToVector()) {
      covered.Insert(c);
    }
  }

  struct Scored {
    int pool;
    double score;
    std::vector<std::string> scarce;
  };
  std::vector<Scored> candidates;
  for (int k = static_cast<int>(instance.pc().size()); k < instance.pool_size();
       ++k) {
    if (scope.active[k] || mu_upper[k] <= 0) continue;
    bool fits = false;
    double sum = 0.0;
    for (int j : targets) {
      fits |= Eligible(instance, k, j, config.theta);
      sum += std::max(instance.similarity(k, j), 0.0);
    }
    if (!fits) continue;
    const Reviewer& r = instance.reviewer(k);
    std::vector<std::string> scarce;
    if (senior_scarce && r.IsSenior()) scarce.push_back("senior");
    if (industry_scarce && r.IndustryCapable()) scarce.push_back("industry");
    if (academia_scarce && r.AcademiaCapable()) scarce.push_back("academia");
    for (Continent c : r.locations.ToVector()) {
      if (!covered.Contains(c)) scarce.push_back(std::string(DisplayName(c)));
    }
    const double score = sum / static_cast<double>(targets.size()) +
                         config.diversity_bonus * scarce.size();
    candidates.push_back({k, score, std::move(scarce)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Scored& a, const Scored& b) {
                     return a.score > b.score;
                   });
  if (static_cast<int>(candidates.size()) < config.kappa) {
    spdlog::warn("only {} fitting ERC candidates left for {} insertions",
                 candidates.size(), config.kappa);
    candidates.resize(candidates.size());
  } else {
    candidates.resize(config.kappa);
  }

  std::vector<Suggestion> out;
  for (const Scored& c : candidates) {
    scope.active[c.pool] = true;
    const Reviewer& r = instance.reviewer(c.pool);
    std::vector<int> fitting;
    for (int j : targets) {
      if (Eligible(instance, c.pool, j, config.theta)) fitting.push_back(j);
    }
    std::stable_sort(fitting.begin(), fitting.end(), [&](int a, int b) {
      return instance.similarity(c.pool, a) > instance.similarity(c.pool, b);
    });
    if (fitting.size() > 3) fitting.resize(3);
    Suggestion s;
    s.reviewer_id = r.id;
    s.score = c.score;
    s.iteration = iteration;
    std::ostringstream why;
    why << (r.name.empty() ? r.id : r.name) << " (" << Describe(r)
        << "): topically fitting";
    for (size_t i = 0; i < fitting.size(); ++i) {
      const auto& id = instance.submissions()[fitting[i]].id;
      s.example_submission_ids.push_back(id);
      why << (i == 0 ? " " : ", ") << id;
    }
    if (!c.scarce.empty()) {
      why << "; adds scarce";
      for (size_t i = 0; i < c.scarce.size(); ++i) {
        why << (i == 0 ? " " : ", ") << c.scarce[i];
      }
    }
    s.explanation = why.str();
    out.push_back(std::move(s));
  }
  return out;
}

RoutineOutput Run(const ConferenceInstance& instance, const MainConfig& config) {
  ValidateMainConfig(config);
  const int pool = instance.pool_size();
  const int lambda = instance.lambda();
  std::vector<int> mu_upper(pool);
  for (int k = 0; k < pool; ++k) {
    mu_upper[k] = config.mu_upper ? *config.mu_upper
                                  : instance.reviewer(k).mu_upper;
  }

  RoutineOutput out;
  Scope scope;
  scope.active.assign(pool, false);
  for (int k = 0; k < static_cast<int>(instance.pc().size()); ++k) {
    scope.active[k] = true;
  }
  scope.papers.resize(instance.num_submissions());
  std::iota(scope.papers.begin(), scope.papers.end(), 0);

  out.insertions = PreflightExtend(instance, scope, mu_upper);

  // Lower bounds for the final solves; the search loop runs without them.
  auto lower_bounds = [&] {
    std::vector<int> mu_lower(pool, 0);
    for (int k = 0; k < pool; ++k) {
      if (!scope.active[k]) continue;
      const Reviewer& r = instance.reviewer(k);
      if (config.restrictive && instance.IsPcIndex(k) &&
          r.origin == Origin::kOriginalPc) {
        bool any = false;
        for (int j : scope.papers) {
          any = any || Eligible(instance, k, j, config.theta);
        }
        mu_lower[k] = any ? 1 : 0;
      } else if (!config.restrictive) {
        mu_lower[k] = std::min(r.mu_lower, mu_upper[k]);
      }
    }
    return mu_lower;
  };
  out.out_of_scope_papers =
      ApplyTheta(instance, scope, lower_bounds(), config.theta);

  const std::vector<int> zero(pool, 0);
  SubroutineConfig feasibility = config.sub;
  feasibility.optimize_similarity = false;
  std::vector<std::string> last_blame;
  for (int iteration = 1;; ++iteration) {
    if (iteration > config.max_iterations) {
      throw DiversError("no feasible assignment after " +
                            std::to_string(config.max_iterations) +
                            " iterations",
                        last_blame);
    }
    out.iterations = iteration;
    const SubResult probe =
        SolveAssignment(instance, BuildPairs(instance, scope, scope.papers,
                                             config.theta),
                        zero, mu_upper, feasibility);
    if (probe.feasible) break;
    last_blame = probe.blamed_papers;
    spdlog::info("iteration {}: assignment step failed ({})", iteration,
                 probe.reason);

    const auto problems = IdentifyProblemPapers(instance, scope, mu_upper,
                                                config, iteration);
    std::vector<int> targets;
    for (const ProblemPaper& p : problems) {
      if (static_cast<int>(targets.size()) >= config.kappa &&
          p.failure_probability < 1.0) {
        break;
      }
      targets.push_back(*instance.FindSubmission(p.submission_id));
    }
    if (targets.empty()) {
      for (const auto& id : probe.blamed_papers) {
        targets.push_back(*instance.FindSubmission(id));
      }
    }
    if (targets.empty()) targets = scope.papers;
    auto added =
        ExtendPc(instance, scope, mu_upper, targets, config, iteration);

    if (added.empty() && targets != scope.papers) {
      added = ExtendPc(instance, scope, mu_upper, scope.papers, config,
                       iteration);
    }

    // Papers without a diverse independent reviewer set even with the
    // whole ERC.
    std::vector<int> kept;
    for (int j : scope.papers) {
      std::vector<int> candidates;
      for (int k = 0; k < pool; ++k) {
        const bool reachable = scope.active[k] || !instance.IsPcIndex(k);
        if (reachable && Eligible(instance, k, j, config.theta)) {
          candidates.push_back(k);
        }
      }
      if (static_cast<int>(candidates.size()) < lambda ||
          !HasValidReviewerSet(instance, candidates, {})) {
        out.out_of_scope_papers.push_back(instance.submissions()[j].id);
      } else {
        kept.push_back(j);
      }
    }
    const bool dropped = kept.size() < scope.papers.size();
    scope.papers = std::move(kept);
    if (scope.papers.empty()) throw DiversError("no assignable submissions");
    if (added.empty() && !dropped) {
      throw DiversError("no feasible assignment and no ERC member left to "
                        "insert: " + probe.reason,
                        probe.blamed_papers);
    }
    out.insertions.insert(out.insertions.end(), added.begin(), added.end());
  }

  // Tries: index 0 is the undropped solve.
  const PairSet base = BuildPairs(instance, scope, scope.papers, config.theta);
  std::vector<int> mu_lower = lower_bounds();
  std::vector<SubResult> results(config.tries + 1);
  auto solve_tries = [&] {
    ParallelFor(config.tries + 1, [&](int t) {
      PairSet pairs = base;
      if (t > 0) {
        std::mt19937_64 rng(
            StreamSeed(config.seed, kTryStream, static_cast<uint64_t>(t)));
        std::bernoulli_distribution drop(config.drop_pct);
        std::vector<ReviewerPaper> kept;
        for (const ReviewerPaper& p : pairs.allowed) {
          if (!drop(rng)) kept.push_back(p);
        }
        pairs.allowed = std::move(kept);
      }
      results[t] =
          SolveAssignment(instance, pairs, mu_lower, mu_upper, config.sub);
    });
  };
  solve_tries();
  auto any_feasible = [&] {
    return std::any_of(results.begin(), results.end(),
                       [](const SubResult& r) { return r.feasible; });
  };
  if (!any_feasible() && config.restrictive) {
    spdlog::warn("restrictive lower bounds cannot be met; solving without them");
    out.restrictive_satisfied = false;
    mu_lower.assign(pool, 0);
    solve_tries();
  }
  if (!any_feasible()) {
    spdlog::warn("no try found an assignment; taking the first feasible one");
    results[0] =
        SolveAssignment(instance, base, mu_lower, mu_upper, feasibility);
  }
  if (!any_feasible()) {
    throw DiversError("no feasible assignment in any try: " +
                          results[0].reason,
                      results[0].blamed_papers);
  }

  int best = -1;
  double best_div = 0.0;
  for (int t = 0; t <= config.tries; ++t) {
    if (!results[t].feasible) continue;
    ++out.feasible_tries;
    const double div = Diversity(results[t].assignment, instance);
    if (best < 0 || div > best_div ||
        (div == best_div && results[t].objective > results[best].objective)) {
      best = t;
      best_div = div;
    }
  }
  out.assignment = std::move(results[best].assignment);
  out.assignment.provenance = "divers";
  out.div = best_div;

  std::vector<int> load(pool, 0);
  for (const auto& [paper, members] : out.assignment.sets) {
    for (const auto& id : members) ++load[*instance.FindReviewer(id)];
  }
  for (const Suggestion& s : out.insertions) {
    if (load[*instance.FindReviewer(s.reviewer_id)] > 0) {
      out.suggestions.push_back(s);
    }
  }
  std::stable_sort(out.suggestions.begin(), out.suggestions.end(),
                   [](const Suggestion& a, const Suggestion& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.iteration < b.iteration;
                   });
  for (int k = 0; k < static_cast<int>(instance.pc().size()); ++k) {
    if (instance.pc()[k].origin == Origin::kOriginalPc && load[k] == 0) {
      out.unused_pc.push_back(instance.pc()[k].id);
    }
  }

  std::vector<Reviewer> erc = instance.erc();
  for (const Suggestion& s : out.suggestions) {
    const int k = *instance.FindReviewer(s.reviewer_id);
    erc[k - instance.pc().size()].origin = Origin::kInserted;
  }
  out.instance = ConferenceInstance(
      lambda, instance.submissions(), instance.pc(), std::move(erc),
      instance.sim_pc(), instance.sim_erc(), instance.dep());
  return out;
}

}  // namespace revcover

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

#include "revcover/model.h"

#include <algorithm>
#include <array>
#include <set>

namespace revcover {
namespace {

constexpr std::array<std::string_view, kNumContinents> kContinentKeys = {
    "south_america", "africa",        "antarctica", "asia",
    "oceania",       "north_america", "europe"};
constexpr std::array<std::string_view, kNumContinents> kContinentNames = {
    "South America", "Africa",        "Antarctica", "Asia",
    "Oceania",       "North America", "Europe"};

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string_view ToString(Background b) {
  switch (b) {
    case Background::kIndustry:
      return "industry";
    case Background::kAcademia:
      return "academia";
    case Background::kBoth:
      return "both";
  }
  return "?";
}

std::string_view ToString(Continent c) {
  return kContinentKeys[static_cast<int>(c)];
}

std::string_view DisplayName(Continent c) {
  return kContinentNames[static_cast<int>(c)];
}

std::string_view ToString(Seniority s) {
  switch (s) {
    case Seniority::kSenior:
      return "senior";
    case Seniority::kAdvanced:
      return "advanced";
    case Seniority::kJunior:
      return "junior";
  }
  return "?";
}

std::string_view ToString(Origin o) {
  switch (o) {
    case Origin::kOriginalPc:
      return "original_pc";
    case Origin::kErc:
      return "erc";
    case Origin::kInserted:
      return "inserted";
  }
  return "?";
}

std::optional<Background> ParseBackground(std::string_view s) {
  if (s == "industry") return Background::kIndustry;
  if (s == "academia") return Background::kAcademia;
  if (s == "both") return Background::kBoth;
  return std::nullopt;
}

std::optional<Continent> ParseContinent(std::string_view s) {
  for (int i = 0; i < kNumContinents; ++i) {
    if (kContinentKeys[i] == s) return static_cast<Continent>(i);
  }
  return std::nullopt;
}

std::optional<Seniority> ParseSeniority(std::string_view s) {
  if (s == "senior") return Seniority::kSenior;
  if (s == "advanced") return Seniority::kAdvanced;
  if (s == "junior") return Seniority::kJunior;
  return std::nullopt;
}

std::optional<Origin> ParseOrigin(std::string_view s) {
  if (s == "original_pc") return Origin::kOriginalPc;
  if (s == "erc") return Origin::kErc;
  if (s == "inserted") return Origin::kInserted;
  return std::nullopt;
}

ContinentSet::ContinentSet(std::initializer_list<Continent> continents) {
  for (Continent c : continents) Insert(c);
}

std::vector<Continent> ContinentSet::ToVector() const {
  std::vector<Continent> out;
  for (int i = 0; i < kNumContinents; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<Continent>(i));
  }
  return out;
}

SimilarityMatrix::SimilarityMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("similarity matrix dimensions are negative");
  }
  if (!IsValidEntry(fill)) {
    throw std::invalid_argument("similarity fill value outside [0,1]");
  }
  values_.assign(static_cast<size_t>(rows) * cols, fill);
}

SimilarityMatrix::SimilarityMatrix(int rows, int cols,
                                   std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows < 0 || cols < 0 ||
      values_.size() != static_cast<size_t>(rows) * cols) {
    throw std::invalid_argument("similarity matrix size mismatch");
  }
  for (double v : values_) {
    if (!IsValidEntry(v)) {
      throw std::invalid_argument("similarity entry outside [0,1] u {-1}");
    }
  }
}

void SimilarityMatrix::Set(int row, int col, double value) {
  if (!IsValidEntry(value)) {
    throw std::invalid_argument("similarity entry outside [0,1] u {-1}");
  }
  values_[static_cast<size_t>(row) * cols_ + col] = value;
}

void DependencyMatrix::Add(int a, int b) {
  if (a == b) throw std::invalid_argument("reviewer cannot depend on itself");
  if (a < 0 || b < 0 || a >= size() || b >= size()) {
    throw std::out_of_range("dependency index out of range");
  }
  auto insert = [](std::vector<int>& list, int v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adjacency_[a], b);
  insert(adjacency_[b], a);
}

void DependencyMatrix::Remove(int a, int b) {
  auto erase = [](std::vector<int>& list, int v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
  };
  if (a < 0 || b < 0 || a >= size() || b >= size()) return;
  erase(adjacency_[a], b);
  erase(adjacency_[b], a);
}

bool DependencyMatrix::operator()(int a, int b) const {
  if (a < 0 || a >= size()) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<std::pair<int, int>> DependencyMatrix::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

ConferenceInstance::ConferenceInstance(int lambda,
                                       std::vector<Submission> submissions,
                                       std::vector<Reviewer> pc,
                                       std::vector<Reviewer> erc,
                                       SimilarityMatrix sim_pc,
                                       SimilarityMatrix sim_erc,
                                       DependencyMatrix dep)
    : lambda_(lambda),
      submissions_(std::move(submissions)),
      pc_(std::move(pc)),
      erc_(std::move(erc)),
      sim_pc_(std::move(sim_pc)),
      sim_erc_(std::move(sim_erc)),
      dep_(std::move(dep)) {
  if (lambda_ < 1) throw StructuralError("lambda must be at least 1");
  const int m = num_submissions();
  if (sim_pc_.rows() != static_cast<int>(pc_.size()) || sim_pc_.cols() != m) {
    throw StructuralError("sim_pc dimensions do not match |PC| x |M|");
  }
  if (sim_erc_.rows() != static_cast<int>(erc_.size()) ||
      (sim_erc_.cols() != m && !erc_.empty())) {
    throw StructuralError("sim_erc dimensions do not match |ERC| x |M|");
  }
  if (erc_.empty()) sim_erc_ = SimilarityMatrix(0, m);
  if (dep_.size() != pool_size()) {
    throw StructuralError("dependency matrix does not cover PC u ERC");
  }
  for (int j = 0; j < m; ++j) {
    const Submission& s = submissions_[j];
    if (!submission_index_.emplace(s.id, j).second) {
      throw StructuralError("duplicate submission id '" + s.id + "'");
    }
    if (s.text.empty()) {
      throw StructuralError("submission '" + s.id + "' has empty text");
    }
    if (s.author_ids.empty()) {
      throw StructuralError("submission '" + s.id + "' has no authors");
    }
  }
  for (int k = 0; k < pool_size(); ++k) {
    const Reviewer& r = reviewer(k);
    if (!reviewer_index_.emplace(r.id, k).second) {
      throw StructuralError("duplicate reviewer id '" + r.id + "'");
    }
    if (r.mu_lower < 0 || r.mu_upper < 1 || r.mu_lower > r.mu_upper) {
      throw StructuralError("reviewer '" + r.id +
                            "' violates 0 <= mu_lower <= mu_upper, "
                            "mu_upper >= 1");
    }
    if (r.locations.empty()) {
      throw StructuralError("reviewer '" + r.id + "' has no location");
    }
  }
}

std::optional<int> ConferenceInstance::FindReviewer(std::string_view id) const {
  auto it = reviewer_index_.find(std::string(id));
  if (it == reviewer_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ConferenceInstance::FindSubmission(
    std::string_view id) const {
  auto it = submission_index_.find(std::string(id));
  if (it == submission_index_.end()) return std::nullopt;
  return it->second;
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMissingSet:
      return "missing_set";
    case ViolationKind::kUnknownSubmission:
      return "unknown_submission";
    case ViolationKind::kUnknownReviewer:
      return "unknown_reviewer";
    case ViolationKind::kSetSize:
      return "set_size";
    case ViolationKind::kDuplicateReviewer:
      return "duplicate_reviewer";
    case ViolationKind::kConflictOfInterest:
      return "conflict_of_interest";
    case ViolationKind::kBelowTheta:
      return "below_theta";
    case ViolationKind::kUpperLoad:
      return "upper_load";
    case ViolationKind::kLowerLoad:
      return "lower_load";
    case ViolationKind::kDependency:
      return "dependency";
    case ViolationKind::kBackground:
      return "background";
    case ViolationKind::kSeniority:
      return "seniority";
    case ViolationKind::kLocation:
      return "location";
  }
  return "?";
}

bool FeasibilityReport::Has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

bool SetIsDiverse(std::span<const Reviewer* const> members,
                  const std::string& submission_id,
                  std::vector<Violation>* violations) {
  bool ok = true;
  auto fail = [&](ViolationKind kind, std::string message) {
    ok = false;
    if (violations != nullptr) {
      violations->push_back({kind, submission_id, {}, std::move(message)});
    }
  };
  bool industry = false, academia = false, senior = false;
  for (const Reviewer* r : members) {
    industry |= r->IndustryCapable();
    academia |= r->AcademiaCapable();
    senior |= r->IsSenior();
  }
  if (!industry) {
    fail(ViolationKind::kBackground, "background: no industry-capable member");
  }
  if (!academia) {
    fail(ViolationKind::kBackground, "background: no academia-capable member");
  }
  if (!senior) fail(ViolationKind::kSeniority, "seniority: no senior member");
  if (!members.empty()) {
    for (int y = 0; y < kNumContinents; ++y) {
      const auto c = static_cast<Continent>(y);
      const bool all_share =
          std::all_of(members.begin(), members.end(),
                      [c](const Reviewer* r) { return r->locations.Contains(c); });
      if (all_share) {
        fail(ViolationKind::kLocation,
             "location: all share " + std::string(DisplayName(c)));
      }
    }
  }
  return ok;
}

FeasibilityReport IsFeasible(const Assignment& assignment,
                             const ConferenceInstance& instance,
                             const FeasibilityOptions& options) {
  const int pool = instance.pool_size();
  if ((options.mu_lower && static_cast<int>(options.mu_lower->size()) != pool) ||
      (options.mu_upper && static_cast<int>(options.mu_upper->size()) != pool)) {
    throw StructuralError("bound vectors do not match the reviewer pool size");
  }
  FeasibilityReport report;
  auto& out = report.violations;

  std::vector<std::string> required;
  if (options.required_submissions) {
    required = *options.required_submissions;
  } else {
    for (const auto& s : instance.submissions()) required.push_back(s.id);
  }
  const std::set<std::string> required_set(required.begin(), required.end());
  for (const auto& id : required) {
    if (!instance.FindSubmission(id)) {
      throw StructuralError("required submission '" + id + "' is unknown");
    }
    if (!assignment.sets.contains(id)) {
      out.push_back({ViolationKind::kMissingSet, id, {},
                     "submission has no reviewer set"});
    }
  }

  std::vector<int> load(pool, 0);
  for (const auto& [paper_id, members] : assignment.sets) {
    const auto paper = instance.FindSubmission(paper_id);
    if (!paper) {
      out.push_back({ViolationKind::kUnknownSubmission, paper_id, {},
                     "submission is not part of the instance"});
      continue;
    }
    if (!required_set.contains(paper_id)) {
      out.push_back({ViolationKind::kUnknownSubmission, paper_id, {},
                     "submission is outside the assignable scope"});
    }
    if (static_cast<int>(members.size()) != instance.lambda()) {
      out.push_back({ViolationKind::kSetSize, paper_id, members,
                     "set has " + std::to_string(members.size()) +
                         " reviewers, expected " +
                         std::to_string(instance.lambda())});
    }
    std::vector<int> indices;
    std::vector<const Reviewer*> resolved;
    std::set<std::string> seen;
    for (const auto& rid : members) {
      if (!seen.insert(rid).second) {
        out.push_back({ViolationKind::kDuplicateReviewer, paper_id, {rid},
                       "reviewer listed twice"});
        continue;
      }
      const auto k = instance.FindReviewer(rid);
      if (!k) {
        out.push_back({ViolationKind::kUnknownReviewer, paper_id, {rid},
                       "reviewer is not part of the instance"});
        continue;
      }
      indices.push_back(*k);
      resolved.push_back(&instance.reviewer(*k));
      ++load[*k];
      const double s = instance.similarity(*k, *paper);
      if (s == SimilarityMatrix::kConflict) {
        out.push_back({ViolationKind::kConflictOfInterest, paper_id, {rid},
                       "conflict of interest"});
      } else if (s < options.theta) {
        out.push_back({ViolationKind::kBelowTheta, paper_id, {rid},
                       "similarity " + std::to_string(s) + " below theta"});
      }
    }
    if (options.check_dependencies) {
      for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = a + 1; b < indices.size(); ++b) {
          if (instance.dep()(indices[a], indices[b])) {
            const std::vector<std::string> pair = {
                instance.reviewer(indices[a]).id,
                instance.reviewer(indices[b]).id};
            out.push_back({ViolationKind::kDependency, paper_id, pair,
                           "dependency in set: " + JoinIds(pair)});
          }
        }
      }
    }
    if (options.check_diversity) {
      SetIsDiverse(resolved, paper_id, &out);
    }
  }

  for (int k = 0; k < pool; ++k) {
    const Reviewer& r = instance.reviewer(k);
    const int upper = options.mu_upper ? (*options.mu_upper)[k] : r.mu_upper;
    if (load[k] > upper) {
      out.push_back({ViolationKind::kUpperLoad, {}, {r.id},
                     "load " + std::to_string(load[k]) + " exceeds mu_upper " +
                         std::to_string(upper)});
    }
    if (!options.enforce_lower) continue;
    int lower = 0;
    if (options.mu_lower) {
      lower = (*options.mu_lower)[k];
    } else if (instance.IsPcIndex(k) || load[k] > 0) {
      lower = r.mu_lower;
    }
    if (load[k] < lower) {
      out.push_back({ViolationKind::kLowerLoad, {}, {r.id},
                     "load " + std::to_string(load[k]) + " below mu_lower " +
                         std::to_string(lower)});
    }
  }
  report.feasible = out.empty();
  return report;
}

FeasibilityReport IsFeasible(const Assignment& assignment,
                             const ConferenceInstance& instance,
                             bool enforce_lower, double theta) {
  FeasibilityOptions options;
  options.enforce_lower = enforce_lower;
  options.theta = theta;
  return IsFeasible(assignment, instance, options);
}

}  // namespace revcover

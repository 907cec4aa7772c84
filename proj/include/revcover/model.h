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

// Domain types shared by every part of the solver: reviewers, submissions,
// similarity and dependency matrices, assignments and the conference
// instance container, plus the feasibility predicate for assignments.
//
// Reviewers are addressed by a "pool index": PC members occupy
// [0, |PC|), ERC candidates occupy [|PC|, |PC| + |ERC|). The dependency
// matrix and all per-reviewer bound vectors use the same indexing.

#ifndef REVCOVER_MODEL_H_
#define REVCOVER_MODEL_H_

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace revcover {

// Raised when containers disagree on their dimensions or reference
// entities that do not exist.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric values follow the profBG convention used by the diversity score.
enum class Background : int { kIndustry = -1, kBoth = 0, kAcademia = 1 };

enum class Continent : int {
  kSouthAmerica = 0,
  kAfrica = 1,
  kAntarctica = 2,
  kAsia = 3,
  kOceania = 4,
  kNorthAmerica = 5,
  kEurope = 6,
};
inline constexpr int kNumContinents = 7;

enum class Seniority : int { kSenior = 0, kAdvanced = 1, kJunior = 2 };
inline constexpr int kNumSeniorityLevels = 3;

enum class Origin { kOriginalPc, kErc, kInserted };

std::string_view ToString(Background b);
std::string_view ToString(Continent c);
std::string_view ToString(Seniority s);
std::string_view ToString(Origin o);
// Human readable continent name ("North America").
std::string_view DisplayName(Continent c);

std::optional<Background> ParseBackground(std::string_view s);
std::optional<Continent> ParseContinent(std::string_view s);
std::optional<Seniority> ParseSeniority(std::string_view s);
std::optional<Origin> ParseOrigin(std::string_view s);

// Set of continents a reviewer is associated with.
class ContinentSet {
 public:
  ContinentSet() = default;
  ContinentSet(std::initializer_list<Continent> continents);

  void Insert(Continent c) { bits_.set(static_cast<int>(c)); }
  bool Contains(Continent c) const { return bits_.test(static_cast<int>(c)); }
  bool empty() const { return bits_.none(); }
  int size() const { return static_cast<int>(bits_.count()); }
  std::vector<Continent> ToVector() const;

  int IntersectionSize(const ContinentSet& other) const {
    return static_cast<int>((bits_ & other.bits_).count());
  }
  int UnionSize(const ContinentSet& other) const {
    return static_cast<int>((bits_ | other.bits_).count());
  }

  friend bool operator==(const ContinentSet&, const ContinentSet&) = default;

 private:
  std::bitset<kNumContinents> bits_;
};

struct Reviewer {
  std::string id;
  std::string name;
  Background background = Background::kAcademia;
  ContinentSet locations;
  Seniority seniority = Seniority::kJunior;
  int mu_lower = 0;
  int mu_upper = 1;
  std::string profile_text;
  Origin origin = Origin::kOriginalPc;

  bool IndustryCapable() const { return background != Background::kAcademia; }
  bool AcademiaCapable() const { return background != Background::kIndustry; }
  bool IsSenior() const { return seniority == Seniority::kSenior; }

  friend bool operator==(const Reviewer&, const Reviewer&) = default;
};

struct Submission {
  std::string id;
  std::string text;
  std::vector<std::string> author_ids;

  friend bool operator==(const Submission&, const Submission&) = default;
};

// Dense reviewer x submission similarity scores. Entries lie in [0, 1];
// kConflict marks a conflict of interest.
class SimilarityMatrix {
 public:
  static constexpr double kConflict = -1.0;

  SimilarityMatrix() = default;
  SimilarityMatrix(int rows, int cols, double fill = 0.0);
  // Row-major values; throws std::invalid_argument on a size mismatch or an
  // entry outside [0, 1] u {-1}.
  SimilarityMatrix(int rows, int cols, std::vector<double> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int row, int col) const {
    return values_[static_cast<size_t>(row) * cols_ + col];
  }
  bool IsConflict(int row, int col) const {
    return (*this)(row, col) == kConflict;
  }
  void Set(int row, int col, double value);
  std::span<const double> Row(int row) const {
    return {values_.data() + static_cast<size_t>(row) * cols_,
            static_cast<size_t>(cols_)};
  }
  const std::vector<double>& values() const { return values_; }

  static bool IsValidEntry(double v) {
    return v == kConflict || (v >= 0.0 && v <= 1.0);
  }

  friend bool operator==(const SimilarityMatrix&,
                         const SimilarityMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> values_;
};

// Symmetric binary reviewer-reviewer relation with an empty diagonal,
// stored as sorted adjacency lists since real pools are sparse.
class DependencyMatrix {
 public:
  DependencyMatrix() = default;
  explicit DependencyMatrix(int size) : adjacency_(size) {}

  int size() const { return static_cast<int>(adjacency_.size()); }
  // Adds dep[a][b] = dep[b][a] = 1. Self-dependencies are rejected.
  void Add(int a, int b);
  void Remove(int a, int b);
  bool operator()(int a, int b) const;
  std::span<const int> Neighbors(int a) const { return adjacency_[a]; }
  // Unordered pairs (a < b), sorted.
  std::vector<std::pair<int, int>> Pairs() const;

  friend bool operator==(const DependencyMatrix&,
                         const DependencyMatrix&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
};

// R_A(j) for every assigned submission. Sets are keyed by submission id.
struct Assignment {
  int lambda = 3;
  std::map<std::string, std::vector<std::string>> sets;
  // J: summed transformed similarity of all assigned pairs.
  double objective = 0.0;
  std::string provenance;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

class ConferenceInstance {
 public:
  ConferenceInstance() = default;
  // Throws StructuralError when dimensions disagree, ids collide, or a
  // reviewer violates its own invariants.
  ConferenceInstance(int lambda, std::vector<Submission> submissions,
                     std::vector<Reviewer> pc, std::vector<Reviewer> erc,
                     SimilarityMatrix sim_pc, SimilarityMatrix sim_erc,
                     DependencyMatrix dep);

  int lambda() const { return lambda_; }
  const std::vector<Submission>& submissions() const { return submissions_; }
  const std::vector<Reviewer>& pc() const { return pc_; }
  const std::vector<Reviewer>& erc() const { return erc_; }
  const SimilarityMatrix& sim_pc() const { return sim_pc_; }
  const SimilarityMatrix& sim_erc() const { return sim_erc_; }
  const DependencyMatrix& dep() const { return dep_; }

  int num_submissions() const { return static_cast<int>(submissions_.size()); }
  int pool_size() const { return static_cast<int>(pc_.size() + erc_.size()); }
  bool IsPcIndex(int pool) const { return pool < static_cast<int>(pc_.size()); }
  const Reviewer& reviewer(int pool) const {
    return IsPcIndex(pool) ? pc_[pool] : erc_[pool - pc_.size()];
  }
  double similarity(int pool, int submission) const {
    return IsPcIndex(pool) ? sim_pc_(pool, submission)
                           : sim_erc_(pool - static_cast<int>(pc_.size()),
                                      submission);
  }
  std::optional<int> FindReviewer(std::string_view id) const;
  std::optional<int> FindSubmission(std::string_view id) const;

 private:
  int lambda_ = 3;
  std::vector<Submission> submissions_;
  std::vector<Reviewer> pc_;
  std::vector<Reviewer> erc_;
  SimilarityMatrix sim_pc_;
  SimilarityMatrix sim_erc_;
  DependencyMatrix dep_;
  std::unordered_map<std::string, int> reviewer_index_;
  std::unordered_map<std::string, int> submission_index_;
};

enum class ViolationKind {
  kMissingSet,
  kUnknownSubmission,
  kUnknownReviewer,
  kSetSize,
  kDuplicateReviewer,
  kConflictOfInterest,
  kBelowTheta,
  kUpperLoad,
  kLowerLoad,
  kDependency,
  kBackground,
  kSeniority,
  kLocation,
};

std::string_view ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string submission;  // empty for per-reviewer load clauses
  std::vector<std::string> reviewers;
  std::string message;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;

  bool Has(ViolationKind kind) const;
};

struct FeasibilityOptions {
  bool enforce_lower = false;
  double theta = 0.0;
  // Submissions that must receive a set. Defaults to every submission.
  std::optional<std::vector<std::string>> required_submissions;
  // Per pool-index bounds overriding the reviewer fields.
  std::optional<std::vector<int>> mu_lower;
  std::optional<std::vector<int>> mu_upper;
  // Whether the reviewer-set diversity and independence clauses apply.
  bool check_diversity = true;
  bool check_dependencies = true;
};

// Checks every feasibility clause and reports each one that fails: set
// size, similarity threshold and conflicts, load bounds, pairwise
// independence and the background/seniority/location diversity rules.
FeasibilityReport IsFeasible(const Assignment& assignment,
                             const ConferenceInstance& instance,
                             const FeasibilityOptions& options);
FeasibilityReport IsFeasible(const Assignment& assignment,
                             const ConferenceInstance& instance,
                             bool enforce_lower, double theta);

// Diversity clauses for one reviewer set, independent of any assignment.
// Appends to `violations` when non-null.
bool SetIsDiverse(std::span<const Reviewer* const> members,
                  const std::string& submission_id = {},
                  std::vector<Violation>* violations = nullptr);

}  // namespace revcover

#endif  // REVCOVER_MODEL_H_

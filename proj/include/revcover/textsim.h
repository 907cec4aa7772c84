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

// Text similarity: TF-IDF cosine between reviewer profiles and submissions,
// the similarity transform used by the assignment objective, and unigram
// language models compared by Kullback-Leibler divergence.
//
// Conventions:
//   tokens  lowercase runs of [a-z0-9], tokens shorter than 2 dropped
//   tf      raw count
//   idf     ln(N / df), N = every profile and submission in the corpus
//   LM      add-one smoothing over the union vocabulary of a compared pair

#ifndef REVCOVER_TEXTSIM_H_
#define REVCOVER_TEXTSIM_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revcover/model.h"

namespace revcover {

std::vector<std::string> Tokenize(std::string_view text);

// Sorted (term index, weight) entries.
struct SparseVector {
  std::vector<std::pair<int, double>> entries;
  double Norm() const;
};

double Cosine(const SparseVector& a, const SparseVector& b);

class TfIdfModel {
 public:
  static TfIdfModel Fit(std::span<const std::string> documents);

  int num_documents() const { return static_cast<int>(doc_vectors_.size()); }
  const std::unordered_map<std::string, int>& vocabulary() const {
    return vocabulary_;
  }
  const std::vector<double>& idf() const { return idf_; }
  const SparseVector& doc_vector(int doc) const { return doc_vectors_[doc]; }
  // Out-of-vocabulary terms are ignored.
  SparseVector Vectorize(std::string_view text) const;

 private:
  std::unordered_map<std::string, int> vocabulary_;
  std::vector<double> idf_;
  std::vector<SparseVector> doc_vectors_;
};

struct SimilarityBuild {
  SimilarityMatrix pc;
  SimilarityMatrix erc;
  std::vector<std::string> warnings;
};

// Cosine similarities for PC and ERC against every submission, with the
// model fit on all profiles and submissions pooled. A reviewer listed as
// an author of a submission gets the conflict sentinel.
SimilarityBuild ComputeSimilarity(std::span<const Submission> submissions,
                                  std::span<const Reviewer> pc,
                                  std::span<const Reviewer> erc);

// Recomputes both matrices from the instance texts, preserving every
// conflict sentinel already present.
SimilarityBuild BuildSimilarity(const ConferenceInstance& instance);

// f(s) = 1 / (1 - s) for s < 1 and 1e6 for s = 1. Throws std::domain_error
// outside [0, 1].
double TransformF(double similarity);

class TermCounts {
 public:
  TermCounts() = default;
  static TermCounts FromText(std::string_view text);

  const std::map<std::string, int>& counts() const { return counts_; }
  int total() const { return total_; }

 private:
  std::map<std::string, int> counts_;
  int total_ = 0;
};

// Smoothed unigram distribution. Probabilities are strictly positive and
// sum to 1 within 1e-9.
class UnigramLM {
 public:
  // Throws std::invalid_argument when the invariants do not hold.
  explicit UnigramLM(std::map<std::string, double> distribution);

  const std::map<std::string, double>& distribution() const {
    return distribution_;
  }
  // 0 for terms outside the support.
  double Probability(const std::string& term) const;

 private:
  std::map<std::string, double> distribution_;
};

// Add-one smoothing of both profiles over their union vocabulary.
std::pair<UnigramLM, UnigramLM> SmoothPair(const TermCounts& a,
                                           const TermCounts& b);

// KL(p || q) in nats. Throws std::logic_error if q assigns zero
// probability to a term in the support of p.
double KlDivergence(const UnigramLM& p, const UnigramLM& q);

// (KL(a || b) + KL(b || a)) / 2 over the smoothed pair.
double SymmetricKl(const TermCounts& a, const TermCounts& b);

}  // namespace revcover

#endif  // REVCOVER_TEXTSIM_H_

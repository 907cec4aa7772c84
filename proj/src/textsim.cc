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

#include "revcover/textsim.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "spdlog/spdlog.h"

namespace revcover {

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= 2) tokens.push_back(current);
    current.clear();
  };
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto& [index, weight] : entries) sum += weight * weight;
  return std::sqrt(sum);
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  const double na = a.Norm();
  const double nb = b.Norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return std::clamp(dot / (na * nb), 0.0, 1.0);
}

namespace {

std::vector<std::pair<int, int>> CountTerms(
    const std::vector<std::string>& tokens,
    const std::unordered_map<std::string, int>& vocabulary) {
  std::map<int, int> counts;
  for (const auto& t : tokens) {
    auto it = vocabulary.find(t);
    if (it != vocabulary.end()) ++counts[it->second];
  }
  return {counts.begin(), counts.end()};
}

SparseVector Weigh(const std::vector<std::pair<int, int>>& counts,
                   const std::vector<double>& idf) {
  SparseVector v;
  v.entries.reserve(counts.size());
  for (const auto& [term, tf] : counts) {
    const double w = tf * idf[term];
    if (w > 0.0) v.entries.emplace_back(term, w);
  }
  return v;
}

}  // namespace

TfIdfModel TfIdfModel::Fit(std::span<const std::string> documents) {
  TfIdfModel model;
  std::vector<std::vector<std::pair<int, int>>> counts;
  std::vector<int> df;
  counts.reserve(documents.size());
  for (const auto& doc : documents) {
    const auto tokens = Tokenize(doc);
    for (const auto& t : tokens) {
      if (model.vocabulary_.emplace(t, static_cast<int>(df.size())).second) {
        df.push_back(0);
      }
    }
    counts.push_back(CountTerms(tokens, model.vocabulary_));
    for (const auto& [term, tf] : counts.back()) ++df[term];
  }
  const double n = static_cast<double>(documents.size());
  model.idf_.resize(df.size());
  for (size_t t = 0; t < df.size(); ++t) model.idf_[t] = std::log(n / df[t]);
  model.doc_vectors_.reserve(counts.size());
  for (const auto& c : counts) model.doc_vectors_.push_back(Weigh(c, model.idf_));
  return model;
}

SparseVector TfIdfModel::Vectorize(std::string_view text) const {
  return Weigh(CountTerms(Tokenize(text), vocabulary_), idf_);
}

namespace {

bool IsAuthor(const Submission& s, const std::string& reviewer_id) {
  return std::find(s.author_ids.begin(), s.author_ids.end(), reviewer_id) !=
         s.author_ids.end();
}

}  // namespace

SimilarityBuild ComputeSimilarity(std::span<const Submission> submissions,
                                  std::span<const Reviewer> pc,
                                  std::span<const Reviewer> erc) {
  std::vector<std::string> corpus;
  corpus.reserve(pc.size() + erc.size() + submissions.size());
  for (const auto& r : pc) corpus.push_back(r.profile_text);
  for (const auto& r : erc) corpus.push_back(r.profile_text);
  for (const auto& s : submissions) corpus.push_back(s.text);
  const TfIdfModel model = TfIdfModel::Fit(corpus);

  const int m = static_cast<int>(submissions.size());
  const int paper_offset = static_cast<int>(pc.size() + erc.size());
  SimilarityBuild out;
  for (int j = 0; j < m; ++j) {
    if (model.doc_vector(paper_offset + j).entries.empty()) {
      out.warnings.push_back("submission '" + submissions[j].id +
                             "' has no weighted terms");
    }
  }
  auto fill = [&](std::span<const Reviewer> reviewers, int doc_offset) {
    SimilarityMatrix sim(static_cast<int>(reviewers.size()), m);
    for (int i = 0; i < static_cast<int>(reviewers.size()); ++i) {
      const SparseVector& profile = model.doc_vector(doc_offset + i);
      if (profile.entries.empty()) {
        out.warnings.push_back("reviewer '" + reviewers[i].id +
                               "' has an empty profile; similarity row is 0");
      }
      for (int j = 0; j < m; ++j) {
        if (IsAuthor(submissions[j], reviewers[i].id)) {
          sim.Set(i, j, SimilarityMatrix::kConflict);
        } else {
          sim.Set(i, j, Cosine(profile, model.doc_vector(paper_offset + j)));
        }
      }
    }
    return sim;
  };
  out.pc = fill(pc, 0);
  out.erc = fill(erc, static_cast<int>(pc.size()));
  for (const auto& w : out.warnings) spdlog::warn("{}", w);
  return out;
}

SimilarityBuild BuildSimilarity(const ConferenceInstance& instance) {
  SimilarityBuild out = ComputeSimilarity(instance.submissions(), instance.pc(),
                                          instance.erc());
  auto keep_conflicts = [](const SimilarityMatrix& old, SimilarityMatrix& now) {
    for (int i = 0; i < old.rows(); ++i) {
      for (int j = 0; j < old.cols(); ++j) {
        if (old.IsConflict(i, j)) now.Set(i, j, SimilarityMatrix::kConflict);
      }
    }
  };
  keep_conflicts(instance.sim_pc(), out.pc);
  keep_conflicts(instance.sim_erc(), out.erc);
  return out;
}

double TransformF(double similarity) {
  if (!(similarity >= 0.0 && similarity <= 1.0)) {
    throw std::domain_error("similarity " + std::to_string(similarity) +
                            " outside [0, 1]");
  }
  if (similarity < 1.0) return 1.0 / (1.0 - similarity);
  return 1e6;
}

TermCounts TermCounts::FromText(std::string_view text) {
  TermCounts out;
  for (auto& t : Tokenize(text)) {
    ++out.counts_[std::move(t)];
    ++out.total_;
  }
  return out;
}

UnigramLM::UnigramLM(std::map<std::string, double> distribution)
    : distribution_(std::move(distribution)) {
  double sum = 0.0;
  for (const auto& [term, p] : distribution_) {
    if (!(p > 0.0)) {
      throw std::invalid_argument("unigram probability for '" + term +
                                  "' is not strictly positive");
    }
    sum += p;
  }
  if (distribution_.empty() || std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("unigram probabilities do not sum to 1");
  }
}

double UnigramLM::Probability(const std::string& term) const {
  auto it = distribution_.find(term);
  return it == distribution_.end() ? 0.0 : it->second;
}

std::pair<UnigramLM, UnigramLM> SmoothPair(const TermCounts& a,
                                           const TermCounts& b) {
  std::map<std::string, std::pair<int, int>> joint;
  for (const auto& [t, c] : a.counts()) joint[t].first = c;
  for (const auto& [t, c] : b.counts()) joint[t].second = c;
  if (joint.empty()) joint[""] = {0, 0};
  const double v = static_cast<double>(joint.size());
  const double za = a.total() + v;
  const double zb = b.total() + v;
  std::map<std::string, double> pa, pb;
  for (const auto& [t, c] : joint) {
    pa.emplace_hint(pa.end(), t, (c.first + 1) / za);
    pb.emplace_hint(pb.end(), t, (c.second + 1) / zb);
  }
  return {UnigramLM(std::move(pa)), UnigramLM(std::move(pb))};
}

double KlDivergence(const UnigramLM& p, const UnigramLM& q) {
  double kl = 0.0;
  for (const auto& [term, pv] : p.distribution()) {
    const double qv = q.Probability(term);
    if (qv <= 0.0) {
      throw std::logic_error("KL divergence undefined: q('" + term +
                             "') is zero");
    }
    kl += pv * std::log(pv / qv);
  }
  return kl;
}

double SymmetricKl(const TermCounts& a, const TermCounts& b) {
  const auto [p, q] = SmoothPair(a, b);
  return 0.5 * (KlDivergence(p, q) + KlDivergence(q, p));
}

}  // namespace revcover

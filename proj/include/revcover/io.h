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

// JSON instance and assignment files, CSV similarity matrices.
//
// Instance:
//   {"lambda": 3,
//    "submissions": [{"id", "text", "authors": [reviewer ids]}],
//    "pc" / "erc": [{"id", "name", "profBG", "locations": [...],
//                    "seniority", "mu_lower", "mu_upper", "profile_text",
//                    "origin"}],
//    "sim_pc" / "sim_erc": rows of numbers (nested or flat row-major),
//    "dep": [[reviewer id, reviewer id], ...]}
// Missing similarity matrices are computed from the texts.
//
// Assignment: {"assignment": {submission id: [reviewer ids]}, "meta": {...}}

#ifndef REVCOVER_IO_H_
#define REVCOVER_IO_H_

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "revcover/model.h"

namespace revcover {

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  // JSON pointer of the offending field.
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

ConferenceInstance ParseInstance(const nlohmann::json& doc);
nlohmann::json InstanceToJson(const ConferenceInstance& instance);
ConferenceInstance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const ConferenceInstance& instance,
                  const std::filesystem::path& path);

Assignment ParseAssignment(const nlohmann::json& doc, int lambda);
nlohmann::json AssignmentToJson(const Assignment& assignment,
                                const nlohmann::json& meta);
Assignment LoadAssignment(const std::filesystem::path& path, int lambda);
void SaveAssignment(const Assignment& assignment, const nlohmann::json& meta,
                    const std::filesystem::path& path);

// Header row of submission ids, then one row per reviewer starting with
// the reviewer id. Rows and columns are matched to the given id orders.
SimilarityMatrix ReadSimilarityCsv(std::istream& in,
                                   const std::vector<std::string>& reviewer_ids,
                                   const std::vector<std::string>& submission_ids);

std::string ReadFile(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace revcover

#endif  // REVCOVER_IO_H_

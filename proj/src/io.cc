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

#include "revcover/io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "revcover/textsim.h"

namespace revcover {

using nlohmann::json;

namespace {

std::string Child(const std::string& path, const std::string& key) {
  return path + "/" + key;
}
std::string Child(const std::string& path, size_t index) {
  return path + "/" + std::to_string(index);
}

const json& Require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(Child(path, key), "missing field");
  return *it;
}

std::string AsString(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

int AsInt(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<int>();
}

std::string OptionalString(const json& obj, const std::string& key,
                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  return AsString(*it, Child(path, key));
}

template <typename T, typename Parse>
T ParseEnum(const json& v, const std::string& path, Parse parse) {
  const std::string s = AsString(v, path);
  auto parsed = parse(s);
  if (!parsed) throw SchemaError(path, "unknown value '" + s + "'");
  return *parsed;
}

Reviewer ParseReviewer(const json& r, const std::string& path,
                       Origin default_origin) {
  Reviewer out;
  out.id = AsString(Require(r, "id", path), Child(path, "id"));
  out.name = OptionalString(r, "name", path);
  out.background = ParseEnum<Background>(Require(r, "profBG", path),
                                         Child(path, "profBG"),
                                         ParseBackground);
  const json& locs = Require(r, "locations", path);
  const std::string locs_path = Child(path, "locations");
  if (!locs.is_array() || locs.empty()) {
    throw SchemaError(locs_path, "expected a non-empty array of continents");
  }
  for (size_t i = 0; i < locs.size(); ++i) {
    out.locations.Insert(ParseEnum<Continent>(locs[i], Child(locs_path, i),
                                              ParseContinent));
  }
  out.seniority = ParseEnum<Seniority>(Require(r, "seniority", path),
                                       Child(path, "seniority"),
                                       ParseSeniority);
  if (r.contains("mu_lower")) {
    out.mu_lower = AsInt(r["mu_lower"], Child(path, "mu_lower"));
  }
  if (r.contains("mu_upper")) {
    out.mu_upper = AsInt(r["mu_upper"], Child(path, "mu_upper"));
  }
  if (out.mu_lower < 0) throw SchemaError(Child(path, "mu_lower"), "negative");
  if (out.mu_upper < out.mu_lower) {
    throw SchemaError(Child(path, "mu_upper"), "below mu_lower");
  }
  out.profile_text = OptionalString(r, "profile_text", path);
  out.origin = default_origin;
  if (r.contains("origin")) {
    out.origin =
        ParseEnum<Origin>(r["origin"], Child(path, "origin"), ParseOrigin);
  }
  return out;
}

std::vector<Reviewer> ParseReviewers(const json& doc, const std::string& key,
                                     Origin default_origin) {
  std::vector<Reviewer> out;
  const std::string path = "/" + key;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) throw SchemaError(path, "expected an array");
  for (size_t i = 0; i < it->size(); ++i) {
    out.push_back(ParseReviewer((*it)[i], Child(path, i), default_origin));
  }
  return out;
}

SimilarityMatrix ParseMatrix(const json& v, const std::string& path, int rows,
                             int cols) {
  std::vector<double> values;
  values.reserve(static_cast<size_t>(rows) * cols);
  auto push = [&](const json& x, const std::string& p) {
    if (!x.is_number()) throw SchemaError(p, "expected a number");
    const double d = x.get<double>();
    if (!SimilarityMatrix::IsValidEntry(d)) {
      throw SchemaError(p, "similarity " + x.dump() +
                               " outside [0, 1] and not the conflict marker -1");
    }
    values.push_back(d);
  };
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  const bool nested = !v.empty() && v[0].is_array();
  if (nested) {
    if (static_cast<int>(v.size()) != rows) {
      throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
    }
    for (size_t i = 0; i < v.size(); ++i) {
      const std::string rp = Child(path, i);
      if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols) {
        throw SchemaError(rp, "expected " + std::to_string(cols) + " columns");
      }
      for (size_t j = 0; j < v[i].size(); ++j) push(v[i][j], Child(rp, j));
    }
  } else {
    if (static_cast<int64_t>(v.size()) != static_cast<int64_t>(rows) * cols) {
      throw SchemaError(path, "expected " + std::to_string(rows * cols) +
                                  " row-major entries");
    }
    for (size_t i = 0; i < v.size(); ++i) push(v[i], Child(path, i));
  }
  return SimilarityMatrix(rows, cols, std::move(values));
}

json MatrixToJson(const SimilarityMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    const auto row = m.Row(i);
    rows.push_back(json(std::vector<double>(row.begin(), row.end())));
  }
  return rows;
}

json ReviewerToJson(const Reviewer& r) {
  json locs = json::array();
  for (Continent c : r.locations.ToVector()) locs.push_back(ToString(c));
  return json{{"id", r.id},
              {"name", r.name},
              {"profBG", ToString(r.background)},
              {"locations", locs},
              {"seniority", ToString(r.seniority)},
              {"mu_lower", r.mu_lower},
              {"mu_upper", r.mu_upper},
              {"profile_text", r.profile_text},
              {"origin", ToString(r.origin)}};
}

}  // namespace

ConferenceInstance ParseInstance(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  int lambda = 3;
  if (doc.contains("lambda")) {
    lambda = AsInt(doc["lambda"], "/lambda");
    if (lambda < 1) throw SchemaError("/lambda", "must be positive");
  }
  std::vector<Submission> subs;
  const json& js = Require(doc, "submissions", "");
  if (!js.is_array()) throw SchemaError("/submissions", "expected an array");
  for (size_t i = 0; i < js.size(); ++i) {
    const std::string path = Child("/submissions", i);
    Submission s;
    s.id = AsString(Require(js[i], "id", path), Child(path, "id"));
    s.text = OptionalString(js[i], "text", path);
    if (js[i].contains("authors")) {
      const json& a = js[i]["authors"];
      const std::string ap = Child(path, "authors");
      if (!a.is_array()) throw SchemaError(ap, "expected an array");
      for (size_t k = 0; k < a.size(); ++k) {
        s.author_ids.push_back(AsString(a[k], Child(ap, k)));
      }
    }
    subs.push_back(std::move(s));
  }
  std::vector<Reviewer> pc = ParseReviewers(doc, "pc", Origin::kOriginalPc);
  std::vector<Reviewer> erc = ParseReviewers(doc, "erc", Origin::kErc);
  const int m = static_cast<int>(subs.size());
  const int npc = static_cast<int>(pc.size());
  const int nerc = static_cast<int>(erc.size());

  SimilarityMatrix sim_pc, sim_erc;
  const bool has_pc = doc.contains("sim_pc");
  const bool has_erc = doc.contains("sim_erc");
  if (!has_pc || !has_erc) {
    SimilarityBuild built = ComputeSimilarity(subs, pc, erc);
    sim_pc = std::move(built.pc);
    sim_erc = std::move(built.erc);
  }
  if (has_pc) sim_pc = ParseMatrix(doc["sim_pc"], "/sim_pc", npc, m);
  if (has_erc) sim_erc = ParseMatrix(doc["sim_erc"], "/sim_erc", nerc, m);

  std::unordered_map<std::string, int> pool_index;
  for (int k = 0; k < npc; ++k) pool_index.emplace(pc[k].id, k);
  for (int k = 0; k < nerc; ++k) pool_index.emplace(erc[k].id, npc + k);
  DependencyMatrix dep(npc + nerc);
  if (doc.contains("dep")) {
    const json& d = doc["dep"];
    if (!d.is_array()) throw SchemaError("/dep", "expected an array");
    for (size_t i = 0; i < d.size(); ++i) {
      const std::string path = Child("/dep", i);
      if (!d[i].is_array() || d[i].size() != 2) {
        throw SchemaError(path, "expected a pair of reviewer ids");
      }
      int ends[2];
      for (int e = 0; e < 2; ++e) {
        const std::string id = AsString(d[i][e], Child(path, e));
        auto it = pool_index.find(id);
        if (it == pool_index.end()) {
          throw SchemaError(Child(path, e), "unknown reviewer '" + id + "'");
        }
        ends[e] = it->second;
      }
      if (ends[0] == ends[1]) {
        throw SchemaError(path, "reviewer depends on itself");
      }
      dep.Add(ends[0], ends[1]);
    }
  }
  try {
    return ConferenceInstance(lambda, std::move(subs), std::move(pc),
                              std::move(erc), std::move(sim_pc),
                              std::move(sim_erc), std::move(dep));
  } catch (const StructuralError& e) {
    throw SchemaError("", e.what());
  }
}

json InstanceToJson(const ConferenceInstance& instance) {
  json doc;
  doc["lambda"] = instance.lambda();
  json subs = json::array();
  for (const auto& s : instance.submissions()) {
    subs.push_back({{"id", s.id}, {"text", s.text}, {"authors", s.author_ids}});
  }
  doc["submissions"] = subs;
  json pc = json::array(), erc = json::array();
  for (const auto& r : instance.pc()) pc.push_back(ReviewerToJson(r));
  for (const auto& r : instance.erc()) erc.push_back(ReviewerToJson(r));
  doc["pc"] = pc;
  doc["erc"] = erc;
  doc["sim_pc"] = MatrixToJson(instance.sim_pc());
  doc["sim_erc"] = MatrixToJson(instance.sim_erc());
  json dep = json::array();
  for (const auto& [a, b] : instance.dep().Pairs()) {
    dep.push_back({instance.reviewer(a).id, instance.reviewer(b).id});
  }
  doc["dep"] = dep;
  return doc;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) {
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

json ParseJsonText(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ConferenceInstance LoadInstance(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const std::runtime_error& e) {
    throw SchemaError("", e.what());
  }
  return ParseInstance(ParseJsonText(text));
}

void SaveInstance(const ConferenceInstance& instance,
                  const std::filesystem::path& path) {
  WriteFileAtomic(path, InstanceToJson(instance).dump(1) + "\n");
}

Assignment ParseAssignment(const json& doc, int lambda) {
  Assignment out;
  out.lambda = lambda;
  const json* sets = &doc;
  std::string base;
  if (doc.is_object() && doc.contains("assignment")) {
    sets = &doc["assignment"];
    base = "/assignment";
    if (doc.contains("meta") && doc["meta"].contains("provenance") &&
        doc["meta"]["provenance"].is_string()) {
      out.provenance = doc["meta"]["provenance"].get<std::string>();
    }
  }
  if (!sets->is_object()) throw SchemaError(base, "expected an object");
  for (const auto& [paper, members] : sets->items()) {
    const std::string path = Child(base, paper);
    if (!members.is_array()) throw SchemaError(path, "expected an array");
    auto& set = out.sets[paper];
    for (size_t i = 0; i < members.size(); ++i) {
      set.push_back(AsString(members[i], Child(path, i)));
    }
  }
  return out;
}

json AssignmentToJson(const Assignment& assignment, const json& meta) {
  json sets = json::object();
  for (const auto& [paper, members] : assignment.sets) sets[paper] = members;
  json m = meta.is_object() ? meta : json::object();
  m["lambda"] = assignment.lambda;
  m["J"] = assignment.objective;
  if (!assignment.provenance.empty()) m["provenance"] = assignment.provenance;
  return json{{"assignment", sets}, {"meta", m}};
}

Assignment LoadAssignment(const std::filesystem::path& path, int lambda) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const std::runtime_error& e) {
    throw SchemaError("", e.what());
  }
  return ParseAssignment(ParseJsonText(text), lambda);
}

void SaveAssignment(const Assignment& assignment, const json& meta,
                    const std::filesystem::path& path) {
  WriteFileAtomic(path, AssignmentToJson(assignment, meta).dump(2) + "\n");
}

SimilarityMatrix ReadSimilarityCsv(
    std::istream& in, const std::vector<std::string>& reviewer_ids,
    const std::vector<std::string>& submission_ids) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) {
        cell.pop_back();
      }
      size_t start = cell.find_first_not_of(' ');
      cells.push_back(start == std::string::npos ? "" : cell.substr(start));
    }
    return cells;
  };
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("csv:1", "missing header");
  const auto header = split(line);
  std::map<std::string, int> col_of;
  for (size_t c = 1; c < header.size(); ++c) {
    col_of[header[c]] = static_cast<int>(c);
  }
  std::vector<int> columns;
  for (const auto& id : submission_ids) {
    auto it = col_of.find(id);
    if (it == col_of.end()) {
      throw SchemaError("csv:1", "no column for submission '" + id + "'");
    }
    columns.push_back(it->second);
  }
  std::map<std::string, std::vector<std::string>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (cells.size() != header.size()) {
      throw SchemaError("csv:" + std::to_string(line_no),
                        "expected " + std::to_string(header.size()) + " cells");
    }
    rows[cells[0]] = std::move(cells);
  }
  SimilarityMatrix out(static_cast<int>(reviewer_ids.size()),
                       static_cast<int>(submission_ids.size()));
  for (size_t i = 0; i < reviewer_ids.size(); ++i) {
    auto it = rows.find(reviewer_ids[i]);
    if (it == rows.end()) {
      throw SchemaError("csv", "no row for reviewer '" + reviewer_ids[i] + "'");
    }
    for (size_t j = 0; j < columns.size(); ++j) {
      const std::string& cell = it->second[columns[j]];
      double v = 0.0;
      try {
        size_t used = 0;
        v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw SchemaError("csv/" + reviewer_ids[i] + "/" + submission_ids[j],
                          "not a number: '" + cell + "'");
      }
      if (!SimilarityMatrix::IsValidEntry(v)) {
        throw SchemaError("csv/" + reviewer_ids[i] + "/" + submission_ids[j],
                          "similarity outside [0, 1] and not -1");
      }
      out.Set(static_cast<int>(i), static_cast<int>(j), v);
    }
  }
  return out;
}

}  // namespace revcover

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

#include "commands.h"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "revcover/baselines.h"
#include "revcover/datagen.h"
#include "revcover/divers.h"
#include "revcover/io.h"
#include "revcover/metrics.h"
#include "revcover/network.h"
#include "spdlog/spdlog.h"

namespace revcover::cli {

namespace {

using nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An infeasible outcome that still produced a report.
class InfeasibleResult : public std::runtime_error {
 public:
  InfeasibleResult(const std::string& message, json detail)
      : std::runtime_error(message), detail_(std::move(detail)) {}
  const json& detail() const { return detail_; }

 private:
  json detail_;
};

enum class Format { kJson, kTable, kMarkdown };

struct Options {
  std::string config_path;
  std::string out;
  std::string manifest;
  std::string format = "table";
  std::string dot;
  std::string method = "divers";
  std::string instance_path;
  std::string assignment_path;
  std::string preset = "tiny-oracle";
  std::string sim_pc_csv;
  std::string sim_erc_csv;
  std::optional<int> lambda;
  std::optional<int> kappa;
  std::optional<int> tries;
  std::optional<int> mu_upper;
  std::optional<int> merges;
  std::optional<int> planted;
  std::optional<double> theta;
  std::optional<double> theta_positive;
  std::optional<double> drop_pct;
  std::optional<uint64_t> seed;
  bool restrictive = false;
  bool enforce_lower = false;
  bool verbose = false;
};

Format ParseFormat(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "table") return Format::kTable;
  if (s == "markdown") return Format::kMarkdown;
  throw ConfigError("unknown format '" + s + "'");
}

std::string Fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string Render(const Table& t, Format format) {
  std::ostringstream out;
  if (format == Format::kMarkdown) {
    auto line = [&](const std::vector<std::string>& cells) {
      out << "|";
      for (const auto& c : cells) out << " " << c << " |";
      out << "\n";
    };
    line(t.header);
    out << "|";
    for (size_t i = 0; i < t.header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& r : t.rows) line(r);
    return out.str();
  }
  std::vector<size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) {
        out << std::string(width[i] - cells[i].size() + 2, ' ');
      }
    }
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json LoadConfigFile(const Options& o) {
  if (o.config_path.empty()) return json::object();
  try {
    json doc = json::parse(ReadFile(o.config_path));
    if (!doc.is_object()) throw ConfigError("config file must hold an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
}

template <typename T>
void FromFile(const json& doc, const char* key, T& field) {
  if (!doc.contains(key)) return;
  try {
    field = doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config '") + key + "': " + e.what());
  }
}

MainConfig ResolveMainConfig(const Options& o, const json& file) {
  MainConfig c;
  static const std::vector<std::string> kKeys = {
      "theta", "theta_positive", "kappa", "tries", "drop_pct", "sample_runs",
      "sample_drop_pct", "restrictive", "seed", "mu_upper", "lambda",
      "method", "merges", "max_nodes", "stall_nodes", "sample_max_nodes",
      "dependency_repair_retries", "optimize_similarity", "diversity_bonus",
      "generator"};
  for (const auto& [key, value] : file.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  FromFile(file, "theta", c.theta);
  FromFile(file, "kappa", c.kappa);
  FromFile(file, "tries", c.tries);
  FromFile(file, "drop_pct", c.drop_pct);
  FromFile(file, "sample_runs", c.sample_runs);
  FromFile(file, "sample_drop_pct", c.sample_drop_pct);
  FromFile(file, "restrictive", c.restrictive);
  FromFile(file, "seed", c.seed);
  FromFile(file, "diversity_bonus", c.diversity_bonus);
  FromFile(file, "max_nodes", c.sub.max_nodes);
  FromFile(file, "stall_nodes", c.sub.stall_nodes);
  FromFile(file, "sample_max_nodes", c.sample_max_nodes);
  FromFile(file, "dependency_repair_retries", c.sub.dependency_repair_retries);
  FromFile(file, "optimize_similarity", c.sub.optimize_similarity);
  if (file.contains("mu_upper")) {
    int mu = 0;
    FromFile(file, "mu_upper", mu);
    c.mu_upper = mu;
  }
  if (o.theta) c.theta = *o.theta;
  if (o.kappa) c.kappa = *o.kappa;
  if (o.tries) c.tries = *o.tries;
  if (o.drop_pct) c.drop_pct = *o.drop_pct;
  if (o.seed) c.seed = *o.seed;
  if (o.mu_upper) c.mu_upper = *o.mu_upper;
  if (o.restrictive) c.restrictive = true;
  try {
    ValidateMainConfig(c);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

json MainConfigToJson(const MainConfig& c) {
  json j = {{"theta", c.theta},
            {"kappa", c.kappa},
            {"tries", c.tries},
            {"drop_pct", c.drop_pct},
            {"sample_runs", c.sample_runs},
            {"sample_drop_pct", c.sample_drop_pct},
            {"restrictive", c.restrictive},
            {"seed", c.seed},
            {"diversity_bonus", c.diversity_bonus},
            {"max_nodes", c.sub.max_nodes},
            {"stall_nodes", c.sub.stall_nodes},
            {"sample_max_nodes", c.sample_max_nodes},
            {"dependency_repair_retries", c.sub.dependency_repair_retries},
            {"optimize_similarity", c.sub.optimize_similarity}};
  if (c.mu_upper) j["mu_upper"] = *c.mu_upper;
  return j;
}

ConferenceInstance WithLambda(const ConferenceInstance& in, int lambda) {
  if (lambda < 1) throw ConfigError("lambda must be positive");
  return ConferenceInstance(lambda, in.submissions(), in.pc(), in.erc(),
                            in.sim_pc(), in.sim_erc(), in.dep());
}

struct Context {
  Options options;
  json file_config;
  std::vector<std::string> inputs;   // paths hashed into the manifest
  std::vector<std::string> outputs;  // paths written
  json config_snapshot = json::object();
  std::optional<uint64_t> seed;
};

ConferenceInstance LoadInstanceFor(Context& ctx) {
  const Options& o = ctx.options;
  ctx.inputs.push_back(o.instance_path);
  ConferenceInstance instance = LoadInstance(o.instance_path);
  auto csv = [&](const std::string& path, bool pc) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open");
    ctx.inputs.push_back(path);
    std::vector<std::string> reviewers, papers;
    for (const auto& r : pc ? instance.pc() : instance.erc()) {
      reviewers.push_back(r.id);
    }
    for (const auto& s : instance.submissions()) papers.push_back(s.id);
    return ReadSimilarityCsv(in, reviewers, papers);
  };
  if (!o.sim_pc_csv.empty() || !o.sim_erc_csv.empty()) {
    SimilarityMatrix pc = o.sim_pc_csv.empty() ? instance.sim_pc()
                                               : csv(o.sim_pc_csv, true);
    SimilarityMatrix erc = o.sim_erc_csv.empty() ? instance.sim_erc()
                                                 : csv(o.sim_erc_csv, false);
    instance = ConferenceInstance(instance.lambda(), instance.submissions(),
                                  instance.pc(), instance.erc(), std::move(pc),
                                  std::move(erc), instance.dep());
  }
  std::optional<int> lambda = o.lambda;
  if (!lambda && ctx.file_config.contains("lambda")) {
    int l = 0;
    FromFile(ctx.file_config, "lambda", l);
    lambda = l;
  }
  if (lambda && *lambda != instance.lambda()) {
    instance = WithLambda(instance, *lambda);
  }
  return instance;
}

void Emit(Context& ctx, const std::string& content) {
  if (ctx.options.out.empty()) {
    std::cout << content;
  } else {
    WriteFileAtomic(ctx.options.out, content);
    ctx.outputs.push_back(ctx.options.out);
  }
}

json ReportToJson(const AssignmentReport& r) {
  return {{"mean_workload_per_used_reviewer", r.mean_workload_per_used_reviewer},
          {"mean_workload_per_pc_member", r.mean_workload_per_pc_member},
          {"unused_pc", r.unused_pc_count},
          {"dep_pct", r.dep_pct},
          {"fairness", r.fairness},
          {"avg_kl", r.avg_kl},
          {"div", r.div},
          {"J", r.J}};
}

const std::vector<std::string> kReportHeader = {
    "method", "mW/R (/PC)", "U", "Dep", "Gamma", "KL", "Div", "J"};

std::vector<std::string> ReportRow(const std::string& method,
                                   const AssignmentReport& r) {
  return {method,
          Fixed(r.mean_workload_per_used_reviewer) + " (" +
              Fixed(r.mean_workload_per_pc_member) + ")",
          std::to_string(r.unused_pc_count),
          Fixed(r.dep_pct),
          Fixed(r.fairness),
          Fixed(r.avg_kl),
          Fixed(r.div),
          Fixed(r.J)};
}

std::vector<int> PcUpper(const ConferenceInstance& instance,
                         const MainConfig& config) {
  std::vector<int> mu;
  for (const auto& r : instance.pc()) {
    mu.push_back(config.mu_upper ? *config.mu_upper : r.mu_upper);
  }
  return mu;
}

struct MethodOutcome {
  Assignment assignment;
  json meta;
  std::optional<RoutineOutput> routine;
};

MethodOutcome RunMethod(const ConferenceInstance& instance,
                        const std::string& method, const MainConfig& config,
                        int merges) {
  MethodOutcome out;
  out.meta = {{"method", method}, {"seed", config.seed}};
  if (method == "divers") {
    RoutineOutput r = Run(instance, config);
    out.assignment = r.assignment;
    out.meta["theta"] = config.theta;
    out.meta["kappa"] = config.kappa;
    out.meta["tries"] = config.tries;
    out.meta["drop_pct"] = config.drop_pct;
    out.meta["mode"] = config.restrictive ? "restrictive" : "standard";
    out.meta["restrictive_satisfied"] = r.restrictive_satisfied;
    out.meta["out_of_scope"] = r.out_of_scope_papers;
    out.meta["unused_pc"] = r.unused_pc;
    json inserted = json::array();
    for (const auto& s : r.insertions) inserted.push_back(s.reviewer_id);
    out.meta["inserted"] = inserted;
    out.routine = std::move(r);
    return out;
  }
  auto kind = ParseBaselineKind(method);
  if (!kind) throw ConfigError("unknown method '" + method + "'");
  const std::vector<int> mu = PcUpper(instance, config);
  out.assignment = *kind == BaselineKind::kGreedy
                       ? GreedyAssign(instance, mu)
                       : IterativeWorstOff(instance, mu, merges, config.seed);
  if (*kind == BaselineKind::kIterativeWorstOff) out.meta["merges"] = merges;
  return out;
}

int CmdGenerate(Context& ctx) {
  const Options& o = ctx.options;
  GenConfig config;
  try {
    config = Preset(o.preset);
    if (ctx.file_config.contains("generator")) {
      config = GenConfigFromJson(ctx.file_config["generator"], config);
    }
    if (o.seed) config.seed = *o.seed;
    if (o.planted) config.planted_problem_papers = *o.planted;
    if (o.lambda) config.lambda = *o.lambda;
    if (o.mu_upper) config.mu_upper = *o.mu_upper;
    ValidateGenConfig(config);
  } catch (const GenConfigError& e) {
    throw ConfigError(e.what());
  }
  ctx.seed = config.seed;
  ctx.config_snapshot = GenConfigToJson(config);
  ctx.config_snapshot["preset"] = o.preset;
  GeneratedInstance gen = Generate(config);
  json doc = InstanceToJson(gen.instance);
  Emit(ctx, doc.dump(1) + "\n");
  if (!gen.planted_papers.empty()) {
    spdlog::info("planted problem papers: {}", json(gen.planted_papers).dump());
  }
  return kExitOk;
}

std::string DotFor(const ConferenceInstance& instance,
                   const MethodOutcome& outcome, double theta) {
  std::vector<int> reviewers, papers;
  for (int k = 0; k < instance.pool_size(); ++k) {
    const bool inserted =
        outcome.routine &&
        outcome.routine->instance.reviewer(k).origin == Origin::kInserted;
    if (instance.IsPcIndex(k) || inserted) reviewers.push_back(k);
  }
  for (const auto& [paper, members] : outcome.assignment.sets) {
    papers.push_back(*instance.FindSubmission(paper));
  }
  std::sort(papers.begin(), papers.end());
  const std::vector<int> zero(instance.pool_size(), 0);
  std::vector<int> upper;
  for (int k = 0; k < instance.pool_size(); ++k) {
    upper.push_back(instance.reviewer(k).mu_upper);
  }
  BuiltNetwork built =
      BuildNetwork(instance, MakePairSet(instance, reviewers, papers, theta),
                   zero, upper, false);
  return ToDot(built.network);
}

int CmdAssign(Context& ctx) {
  const Options& o = ctx.options;
  const MainConfig config = ResolveMainConfig(o, ctx.file_config);
  std::string method = o.method;
  FromFile(ctx.file_config, "method", method);
  if (!o.method.empty() && o.method != "divers") method = o.method;
  int merges = 10;
  FromFile(ctx.file_config, "merges", merges);
  if (o.merges) merges = *o.merges;
  ctx.seed = config.seed;
  ctx.config_snapshot = MainConfigToJson(config);
  ctx.config_snapshot["method"] = method;
  ctx.config_snapshot["merges"] = merges;

  const ConferenceInstance instance = LoadInstanceFor(ctx);
  ctx.config_snapshot["lambda"] = instance.lambda();
  MethodOutcome outcome = RunMethod(instance, method, config, merges);
  const ConferenceInstance& scored =
      outcome.routine ? outcome.routine->instance : instance;
  Emit(ctx, AssignmentToJson(outcome.assignment, outcome.meta).dump(2) + "\n");
  if (!o.dot.empty()) {
    WriteFileAtomic(o.dot, DotFor(instance, outcome, config.theta));
    ctx.outputs.push_back(o.dot);
  }
  if (!o.out.empty()) {
    const AssignmentReport report = Evaluate(outcome.assignment, scored);
    const Format format = ParseFormat(o.format);
    if (format == Format::kJson) {
      std::cout << ReportToJson(report).dump(2) << "\n";
    } else {
      std::cout << Render({kReportHeader, {ReportRow(method, report)}}, format);
    }
  }
  return kExitOk;
}

int CmdSuggest(Context& ctx) {
  const Options& o = ctx.options;
  const MainConfig config = ResolveMainConfig(o, ctx.file_config);
  ctx.seed = config.seed;
  ctx.config_snapshot = MainConfigToJson(config);
  const ConferenceInstance instance = LoadInstanceFor(ctx);
  const RoutineOutput r = Run(instance, config);
  const Format format = ParseFormat(o.format);
  std::string content;
  if (format == Format::kJson) {
    json list = json::array();
    for (const auto& s : r.suggestions) {
      const Reviewer& rev = instance.reviewer(*instance.FindReviewer(s.reviewer_id));
      list.push_back({{"reviewer_id", s.reviewer_id},
                      {"name", rev.name},
                      {"score", s.score},
                      {"explanation", s.explanation},
                      {"example_submission_ids", s.example_submission_ids},
                      {"iteration", s.iteration}});
    }
    content = json{{"suggestions", list},
                   {"out_of_scope", r.out_of_scope_papers},
                   {"unused_pc", r.unused_pc}}
                  .dump(2) +
              "\n";
  } else {
    Table t{{"rank", "reviewer", "score", "examples", "explanation"}, {}};
    for (size_t i = 0; i < r.suggestions.size(); ++i) {
      const auto& s = r.suggestions[i];
      std::string examples;
      for (const auto& e : s.example_submission_ids) {
        examples += (examples.empty() ? "" : ", ") + e;
      }
      t.rows.push_back({std::to_string(i + 1), s.reviewer_id, Fixed(s.score, 3),
                        examples, s.explanation});
    }
    if (format == Format::kMarkdown) content = "# Reviewer suggestions\n\n";
    content += Render(t, format);
    if (!r.out_of_scope_papers.empty()) {
      std::string ids;
      for (const auto& id : r.out_of_scope_papers) {
        ids += (ids.empty() ? "" : ", ") + id;
      }
      content += "\nOut of scope: " + ids + "\n";
    }
  }
  Emit(ctx, content);
  return kExitOk;
}

int CmdEvaluate(Context& ctx) {
  const Options& o = ctx.options;
  const ConferenceInstance instance = LoadInstanceFor(ctx);
  ctx.inputs.push_back(o.assignment_path);
  const Assignment assignment =
      LoadAssignment(o.assignment_path, instance.lambda());
  FeasibilityOptions fo;
  fo.theta = o.theta.value_or(0.0);
  fo.enforce_lower = o.enforce_lower;
  std::vector<std::string> required;
  for (const auto& [paper, members] : assignment.sets) required.push_back(paper);
  // Papers left out of an assignment are out of scope, not violations.
  fo.required_submissions = required;
  ctx.config_snapshot = {{"theta", fo.theta}, {"enforce_lower", o.enforce_lower}};
  const FeasibilityReport feas = IsFeasible(assignment, instance, fo);
  json doc = {{"feasible", feas.feasible}};
  json violations = json::array();
  for (const auto& v : feas.violations) {
    violations.push_back({{"kind", ToString(v.kind)},
                          {"submission", v.submission},
                          {"reviewers", v.reviewers},
                          {"message", v.message}});
  }
  doc["violations"] = violations;
  std::optional<AssignmentReport> report;
  try {
    report = Evaluate(assignment, instance);
    doc["report"] = ReportToJson(*report);
  } catch (const std::exception& e) {
    doc["report_error"] = e.what();
  }
  const Format format = ParseFormat(o.format);
  std::string content;
  if (format == Format::kJson) {
    content = doc.dump(2) + "\n";
  } else {
    content = std::string("feasible: ") + (feas.feasible ? "yes" : "no") + "\n";
    if (report) {
      content += Render({kReportHeader, {ReportRow("evaluated", *report)}},
                        format);
    }
    if (!feas.violations.empty()) {
      Table t{{"kind", "submission", "message"}, {}};
      for (const auto& v : feas.violations) {
        t.rows.push_back({std::string(ToString(v.kind)), v.submission,
                          v.message});
      }
      content += "\n" + Render(t, format);
    }
  }
  Emit(ctx, content);
  if (!feas.feasible) {
    throw InfeasibleResult("assignment violates " +
                               std::to_string(feas.violations.size()) +
                               " constraint(s)",
                           violations);
  }
  return kExitOk;
}

int CmdCompare(Context& ctx) {
  const Options& o = ctx.options;
  MainConfig base = ResolveMainConfig(o, ctx.file_config);
  double theta_pos = 0.15;
  FromFile(ctx.file_config, "theta_positive", theta_pos);
  if (o.theta_positive) theta_pos = *o.theta_positive;
  int merges = 10;
  FromFile(ctx.file_config, "merges", merges);
  if (o.merges) merges = *o.merges;
  ctx.seed = base.seed;
  ctx.config_snapshot = MainConfigToJson(base);
  ctx.config_snapshot["theta_positive"] = theta_pos;
  ctx.config_snapshot["merges"] = merges;
  const ConferenceInstance instance = LoadInstanceFor(ctx);

  struct Row {
    std::string label;
    std::string method;
    double theta;
    bool restrictive;
  };
  const std::string pos = Fixed(theta_pos);
  const std::vector<Row> rows = {
      {"Greedy", "greedy", 0.0, false},
      {"IterativeWorstOff", "iterative-worst-off", 0.0, false},
      {"D(theta=0)", "divers", 0.0, false},
      {"D(theta=" + pos + ")", "divers", theta_pos, false},
      {"D(theta=0)*", "divers", 0.0, true},
      {"D(theta=" + pos + ")*", "divers", theta_pos, true}};
  Table table{kReportHeader, {}};
  json results = json::array();
  for (const Row& row : rows) {
    MainConfig c = base;
    c.theta = row.theta;
    c.restrictive = row.restrictive;
    try {
      MethodOutcome m = RunMethod(instance, row.method, c, merges);
      const ConferenceInstance& scored =
          m.routine ? m.routine->instance : instance;
      const AssignmentReport r = Evaluate(m.assignment, scored);
      table.rows.push_back(ReportRow(row.label, r));
      json entry = ReportToJson(r);
      entry["method"] = row.label;
      if (m.routine) {
        entry["out_of_scope"] = m.routine->out_of_scope_papers.size();
        entry["inserted"] = m.routine->insertions.size();
      }
      results.push_back(entry);
    } catch (const std::runtime_error& e) {
      table.rows.push_back({row.label, "infeasible", "-", "-", "-", "-", "-", "-"});
      results.push_back({{"method", row.label}, {"error", e.what()}});
    }
  }
  const Format format = ParseFormat(o.format);
  Emit(ctx, format == Format::kJson ? json{{"rows", results}}.dump(2) + "\n"
                                    : Render(table, format));
  return kExitOk;
}

void WriteManifest(const Context& ctx, const std::string& command,
                   const std::vector<std::string>& argv, double seconds) {
  std::string path = ctx.options.manifest;
  if (path.empty() && !ctx.options.out.empty()) {
    path = ctx.options.out + ".manifest.json";
  }
  if (path.empty()) return;
  std::string hashed;
  json inputs = json::array();
  for (const auto& in : ctx.inputs) {
    const std::string data = ReadFile(in);
    inputs.push_back({{"path", in}, {"sha256", Sha256Hex(data)}});
    hashed += Sha256Hex(data);
  }
  if (!ctx.options.config_path.empty()) {
    hashed += Sha256Hex(ReadFile(ctx.options.config_path));
  }
  json m = {{"command", command},
            {"argv", argv},
            {"config", ctx.config_snapshot},
            {"inputs", inputs},
            {"input_hash", Sha256Hex(hashed)},
            {"outputs", ctx.outputs},
            {"wall_time_s", seconds}};
  m["seed"] = ctx.seed ? json(*ctx.seed) : json(nullptr);
  WriteFileAtomic(path, m.dump(2) + "\n");
}

void PrintError(const std::string& kind, const std::string& message,
                json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  std::cerr << extra.dump() << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args) {
  CLI::App app{"Diverse reviewer assignment with PC extension"};
  app.require_subcommand(1);
  Options o;
  std::string seed_text;
  std::string manifest_to_replay;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--out", o.out, "Primary output path (default: stdout)");
    cmd->add_option("--manifest", o.manifest,
                    "Run manifest path (default: <out>.manifest.json)");
    cmd->add_option("--format", o.format, "json, table or markdown")
        ->check(CLI::IsMember({"json", "table", "markdown"}));
    cmd->add_option("--seed", seed_text, "Random seed");
    cmd->add_option("--lambda", o.lambda, "Reviewers per submission");
    cmd->add_flag("-v,--verbose", o.verbose, "Log progress to stderr");
  };
  auto routine = [&](CLI::App* cmd) {
    cmd->add_option("instance", o.instance_path, "Instance JSON")->required();
    cmd->add_option("--theta", o.theta, "Minimum reviewer similarity");
    cmd->add_option("--kappa", o.kappa, "PC insertions per iteration");
    cmd->add_option("--tries", o.tries, "Randomised solves");
    cmd->add_option("--drop-pct", o.drop_pct, "Share of pairs dropped per try");
    cmd->add_flag("--restrictive", o.restrictive,
                  "Every eligible PC member reviews at least once");
    cmd->add_option("--mu-upper", o.mu_upper, "Upper load for every reviewer");
    cmd->add_option("--sim-pc-csv", o.sim_pc_csv, "PC similarity CSV");
    cmd->add_option("--sim-erc-csv", o.sim_erc_csv, "ERC similarity CSV");
  };

  CLI::App* gen = app.add_subcommand("generate", "Write a synthetic instance");
  common(gen);
  gen->add_option("--preset", o.preset, "ictir19-like, ictir20-like, tiny-oracle");
  gen->add_option("--planted", o.planted, "Planted problem papers");
  gen->add_option("--mu-upper", o.mu_upper, "Upper load for every reviewer");

  CLI::App* assign = app.add_subcommand("assign", "Compute an assignment");
  common(assign);
  routine(assign);
  assign->add_option("--method", o.method,
                     "divers, greedy or iterative-worst-off");
  assign->add_option("--merges", o.merges, "Candidates per worst-off round");
  assign->add_option("--dot", o.dot, "Write the flow network as DOT");

  CLI::App* suggest = app.add_subcommand("suggest", "Rank PC extensions");
  common(suggest);
  routine(suggest);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Check an assignment");
  common(evaluate);
  evaluate->add_option("instance", o.instance_path, "Instance JSON")->required();
  evaluate->add_option("assignment", o.assignment_path, "Assignment JSON")
      ->required();
  evaluate->add_option("--theta", o.theta, "Minimum reviewer similarity");
  evaluate->add_flag("--enforce-lower", o.enforce_lower,
                     "Check lower load bounds");

  CLI::App* compare = app.add_subcommand("compare", "Compare all methods");
  common(compare);
  routine(compare);
  compare->add_option("--theta-positive", o.theta_positive,
                      "Threshold of the theta > 0 rows (default 0.15)");
  compare->add_option("--merges", o.merges, "Candidates per worst-off round");

  CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest");
  replay->add_option("manifest", manifest_to_replay, "Manifest JSON")
      ->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError("config", e.what());
    return kExitConfig;
  }
  if (o.verbose) spdlog::set_level(spdlog::level::info);

  if (replay->parsed()) {
    try {
      const json m = json::parse(ReadFile(manifest_to_replay));
      std::vector<std::string> again = {"revcover"};
      for (const auto& a : m.at("argv")) again.push_back(a.get<std::string>());
      for (const auto& in : m.value("inputs", json::array())) {
        const std::string path = in.at("path").get<std::string>();
        if (Sha256Hex(ReadFile(path)) != in.at("sha256").get<std::string>()) {
          spdlog::warn("input '{}' changed since the manifest was written",
                       path);
        }
      }
      return RunCli(again);
    } catch (const std::exception& e) {
      PrintError("config", std::string("unreadable manifest: ") + e.what());
      return kExitConfig;
    }
  }

  Context ctx;
  ctx.options = o;
  const auto start = std::chrono::steady_clock::now();
  std::string command;
  int code = kExitOk;
  try {
    if (!seed_text.empty()) {
      size_t used = 0;
      ctx.options.seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    }
  } catch (const std::exception&) {
    PrintError("config", "--seed must be an unsigned integer");
    return kExitConfig;
  }
  try {
    ctx.file_config = LoadConfigFile(ctx.options);
    if (gen->parsed()) {
      command = "generate";
      code = CmdGenerate(ctx);
    } else if (assign->parsed()) {
      command = "assign";
      code = CmdAssign(ctx);
    } else if (suggest->parsed()) {
      command = "suggest";
      code = CmdSuggest(ctx);
    } else if (evaluate->parsed()) {
      command = "evaluate";
      code = CmdEvaluate(ctx);
    } else if (compare->parsed()) {
      command = "compare";
      code = CmdCompare(ctx);
    }
  } catch (const InfeasibleResult& e) {
    PrintError("infeasible", e.what(), {{"violations", e.detail()}});
    code = kExitInfeasible;
  } catch (const DiversError& e) {
    PrintError("infeasible", e.what(), {{"blamed_papers", e.blamed_papers()}});
    code = kExitInfeasible;
  } catch (const BaselineError& e) {
    PrintError("infeasible", e.what());
    code = kExitInfeasible;
  } catch (const SchemaError& e) {
    PrintError("schema", e.what(), {{"path", e.path()}});
    return kExitSchema;
  } catch (const ConfigError& e) {
    PrintError("config", e.what());
    return kExitConfig;
  } catch (const GenConfigError& e) {
    PrintError("config", e.what());
    return kExitConfig;
  } catch (const StructuralError& e) {
    PrintError("schema", e.what());
    return kExitSchema;
  } catch (const std::exception& e) {
    PrintError("internal", e.what());
    return 1;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  try {
    WriteManifest(ctx, command,
                  std::vector<std::string>(args.begin() + 1, args.end()),
                  seconds);
  } catch (const std::exception& e) {
    spdlog::warn("manifest not written: {}", e.what());
  }
  return code;
}

}  // namespace revcover::cli

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "axb/config.hpp"
#include "axb/corpus.hpp"
#include "axb/json_writer.hpp"
#include "axb/spectral.hpp"

namespace axb {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string summary;
  Json metrics = Json::object();
};

/// Shared grids, operators and corpus realizations for one run. Not thread-safe
/// for mutation; criteria prefetch what they need before parallel sections.
class SuiteContext {
 public:
  explicit SuiteContext(RunConfig cfg);

  const RunConfig& config() const { return cfg_; }
  double tol(double base) const { return base * cfg_.tol_scale; }

  GridPtr grid(int n);
  OperatorPtr op(int n);
  KernelTablePtr table();

  /// Configured corpus; throws DomainError("empty corpus") when none is set.
  std::vector<CorpusEntry> corpus() const;
  std::vector<CorpusEntry> decaying() const;
  HalfLineFunction realize(const CorpusEntry& e, int n);

  void add_file(const std::string& name, std::string content);
  const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }

 private:
  RunConfig cfg_;
  std::map<int, GridPtr> grids_;
  std::map<int, OperatorPtr> ops_;
  KernelTablePtr table_;
  std::vector<std::pair<std::string, std::string>> files_;
};

/// AC1 .. AC14.
std::vector<std::string> criterion_ids();
std::string criterion_title(const std::string& id);

/// Suite name to criterion ids: "all", an id, or a topic alias such as
/// "partition" or "besov". Throws UnknownName.
std::vector<std::string> resolve_suite(const std::string& name);

/// Topic aliases with their criterion ids.
std::vector<std::pair<std::string, std::vector<std::string>>> suite_aliases();

CriterionResult run_criterion(const std::string& id, SuiteContext& ctx);

struct SuiteReport {
  std::string suite;
  std::vector<CriterionResult> results;
  std::vector<std::pair<std::string, std::string>> files;  ///< relative path, content
  Json json;
  bool passed = false;
};

SuiteReport run_suite(const RunConfig& cfg, const std::string& suite);

/// Writes <out_dir>/<suite>/report.json plus the CSV files.
void write_report(const SuiteReport& rep, const std::string& out_dir);

Json config_json(const RunConfig& cfg);

}  // namespace axb

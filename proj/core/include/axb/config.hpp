#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axb {

/// Run configuration. Text form: one `key = value` per line, `#` starts a
/// comment. Lists are comma separated; corpus entries are separated by `;`.
struct RunConfig {
  int grid_n = 512;
  double u_min = -12.0;
  double u_max = 6.0;
  int refine_n = 256;  ///< coarse grid for refinement-stability checks
  int oracle_n = 1024; ///< grid for the kernel eigenrelation
  double tau_max = 12.0;
  int spectral_m = 256;
  std::vector<std::string> corpus;  ///< ids accepted by parse_corpus_entry
  int plane_n_u = 48;
  int plane_n_y = 48;
  std::vector<std::string> suites{"all"};
  double tol_scale = 1.0;
  unsigned long long seed = 20240917ULL;
  std::string out_dir = "axb_reports";
  bool escalate_flags = false;  ///< treat unresolved-spectrum flags as failures
};

/// Defaults with the default corpus ids filled in.
RunConfig default_config();

/// Applies one key/value pair; throws ConfigError naming the key.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parses the text form on top of default_config().
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Canonical text form (round-trips through parse_config).
std::string to_text(const RunConfig& cfg);

/// Throws ConfigError if a field is out of range.
void validate(const RunConfig& cfg);

}  // namespace axb

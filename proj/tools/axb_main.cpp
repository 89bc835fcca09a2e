#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "axb/config.hpp"
#include "axb/corpus.hpp"
#include "axb/describe.hpp"
#include "axb/errors.hpp"
#include "axb/suites.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<int> grid_n;
  std::optional<double> tol_scale;
  std::optional<unsigned long long> seed;
  std::optional<std::string> out;
};

axb::RunConfig build_config(const Overrides& o) {
  axb::RunConfig cfg = o.config_path.empty() ? axb::default_config() : axb::load_config(o.config_path);
  if (o.grid_n) axb::apply_setting(cfg, "grid.n", std::to_string(*o.grid_n));
  if (o.tol_scale) axb::apply_setting(cfg, "tol_scale", axb::format_double(*o.tol_scale));
  if (o.seed) axb::apply_setting(cfg, "seed", std::to_string(*o.seed));
  if (o.out) axb::apply_setting(cfg, "out", *o.out);
  axb::validate(cfg);
  return cfg;
}

int run(const axb::RunConfig& cfg, const std::string& suite) {
  const axb::SuiteReport rep = axb::run_suite(cfg, suite);
  for (const auto& r : rep.results) {
    std::printf("%-5s %s  %s: %s\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.title.c_str(), r.summary.c_str());
  }
  axb::write_report(rep, cfg.out_dir);
  std::printf("report: %s/%s/report.json\n", cfg.out_dir.c_str(), suite.c_str());
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"axb: verification suites for analysis on the ax+b group"};
  app.require_subcommand(1);
  Overrides ov;
  app.add_option("--config", ov.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--grid-n", ov.grid_n, "1-D grid size");
  app.add_option("--tol-scale", ov.tol_scale, "multiplier on error tolerances");
  app.add_option("--seed", ov.seed, "random seed");
  app.add_option("--out", ov.out, "report directory");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a suite: all, AC<k>, or a topic alias");
  verify->add_option("suite", suite, "suite name")->required();

  // Topic shortcuts.
  const std::pair<const char*, const char*> shortcuts[] = {
      {"besov", "K-functional sandwich and Besov equivalence"},
      {"jackson", "Bernstein, Riesz-Boas and Jackson checks"},
      {"frames", "partition telescoping and energy identity"},
      {"spectral", "kernel eigenrelation and two-oracle agreement"},
      {"halfplane", "half-plane representations"},
      {"report", "every suite listed under suites in the configuration"},
  };
  for (const auto& [name, help] : shortcuts) app.add_subcommand(name, help);

  std::string op_name;
  auto* describe = app.add_subcommand("describe", "metadata for one operation (no name lists them)");
  describe->add_option("name", op_name, "operation name");
  auto* corpus = app.add_subcommand("corpus", "list corpus families and default members");

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) {
      if (op_name.empty()) {
        for (const auto& n : axb::operation_names()) std::cout << n << "\n";
      } else {
        std::cout << axb::describe(op_name);
      }
      return 0;
    }
    if (corpus->parsed()) {
      std::cout << "families:\n";
      for (const auto& f : axb::corpus_families()) std::cout << "  " << f << "\n";
      std::cout << "default:\n";
      for (const auto& e : axb::default_corpus()) std::cout << "  " << e.id() << "\n";
      return 0;
    }
    const axb::RunConfig cfg = build_config(ov);
    if (verify->parsed()) return run(cfg, suite);
    if (app.got_subcommand("report")) {
      int rc = 0;
      for (const auto& s : cfg.suites) rc = std::max(rc, run(cfg, s));
      return rc;
    }
    for (const auto& [name, help] : shortcuts) {
      if (app.got_subcommand(name)) return run(cfg, name);
    }
  } catch (const axb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

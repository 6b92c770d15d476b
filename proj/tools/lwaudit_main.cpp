#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lwaudit/report/commands.hpp"
#include "lwaudit/report/run_config.hpp"

namespace rep = lwaudit::report;

namespace {

struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;
};

// Registers --<key> for a config key; the raw string is applied later so that
// flags win over the config file and the environment.
void add_key(CLI::App& app, Overrides& ov, const std::string& key, const std::string& flag,
             const std::string& help) {
  app.add_option_function<std::string>(
      flag, [&ov, key](const std::string& v) { ov.values[key] = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero census and rectangle-identity audit for the Riemann zeta function"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", rep::tool_version());

  Overrides ov;
  app.add_option("--config", ov.config_path, "key = value config file");
  add_key(app, ov, "threads", "--threads", "worker threads (0 = machine parallelism)");
  add_key(app, ov, "abs_tol", "--abs-tol", "evaluator absolute tolerance");
  add_key(app, ov, "out", "--out", "output path (default: standard output)");
  add_key(app, ov, "timestamp", "--timestamp", "timestamp written into JSON envelopes");

  auto* zeros = app.add_subcommand("zeros", "list critical-line zero ordinates up to t_max as CSV");
  add_key(*zeros, ov, "t_max", "--t-max", "upper height");
  add_key(*zeros, ov, "zero_tol", "--zero-tol", "bisection tolerance");

  auto* census = app.add_subcommand("census", "zero counts and ratio N0(T)/N(T) as JSON");
  add_key(*census, ov, "T", "-T,--height", "height T");

  auto* audit = app.add_subcommand("audit", "audit one rectangle as JSON");
  add_key(*audit, ov, "alpha", "-a,--alpha", "alpha in (0, 1/2)");
  add_key(*audit, ov, "T", "-T,--height", "height T");

  auto* sweep = app.add_subcommand("sweep", "audit every (alpha, T) pair as CSV");
  add_key(*sweep, ov, "alphas", "--alphas", "comma-separated alpha list");
  add_key(*sweep, ov, "Ts", "--Ts", "comma-separated T list");

  auto* figure = app.add_subcommand("figure-data", "plottable series as CSV");
  add_key(*figure, ov, "kind", "--kind", "z-trace, s-staircase or residuals");
  add_key(*figure, ov, "t_from", "--from", "first t");
  add_key(*figure, ov, "t_to", "--to", "last t");
  add_key(*figure, ov, "t_step", "--step", "grid step");
  add_key(*figure, ov, "alphas", "--alphas", "alpha list for residuals");
  add_key(*figure, ov, "Ts", "--Ts", "T list for residuals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? rep::kSuccess : rep::kUsage;
  }

  rep::RunConfig cfg;
  try {
    if (!ov.config_path.empty()) cfg = rep::RunConfig::load_file(ov.config_path, cfg);
    cfg.apply_environment();
    for (const auto& [key, value] : ov.values) cfg.set(key, value);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rep::kPrecondition;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto result = rep::run_command(command, cfg);

  if (!result.output.empty()) {
    if (cfg.out.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      file << result.output;
      if (!file) {
        std::cerr << "error: cannot write '" << cfg.out << "'\n";
        return rep::kUsage;
      }
    }
  }
  if (!result.summary.empty()) {
    // The audit summary belongs on standard output unless the report itself
    // is going there.
    const bool to_stdout = command == "audit" && !cfg.out.empty();
    (to_stdout ? std::cout : std::cerr) << result.summary << "\n";
  }
  return result.exit_code;
}

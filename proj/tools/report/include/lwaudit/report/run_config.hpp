#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lwaudit/littlewood_auditor.hpp"
#include "lwaudit/zero_census.hpp"

namespace lwaudit::report {

// Settings for one CLI invocation. Every field has a key in the key=value
// config file and an environment override named LWAUDIT_<KEY in upper case>.
struct RunConfig {
  // command parameters
  double T = 100.0;
  double t_max = 100.0;
  double alpha = 0.45;
  std::vector<double> alphas;
  std::vector<double> Ts;
  std::string kind;
  double t_from = 0.0;
  double t_to = 50.0;
  double t_step = 0.05;

  // numerics
  double abs_tol = 0.0;  // 0 picks the height-dependent default
  int em_cutoff = 20;
  int em_bernoulli_terms = 30;
  double zero_tol = 1e-9;
  double residual_tol = 1e-5;
  double ordinate_guard = 1e-6;
  double scan_step = 0.0;
  double quadrature_tol = 1e-8;
  double identity_tol = 1e-6;
  double vertical_tol = 1e-7;
  double asymptotic_tol = 0.5;

  // execution
  unsigned threads = 0;
  std::string out;
  std::string timestamp;  // empty: SOURCE_DATE_EPOCH, else the current time

  void validate() const;

  EvalConfig eval_for(double t_max) const;
  CensusOptions census_options(double t_max) const;
  AuditOptions audit_options(double t_max) const;

  // Result-affecting keys only; threads, out and timestamp are excluded so
  // output does not depend on them.
  std::map<std::string, std::string> echo() const;

  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  static const std::vector<std::string>& keys();

  std::string to_file_text() const;
  // Keys present in the file override the matching fields of base.
  static RunConfig from_file_text(const std::string& text, RunConfig base);
  static RunConfig from_file_text(const std::string& text);
  static RunConfig load_file(const std::string& path, RunConfig base);

  // Applies LWAUDIT_<KEY> variables found in the environment.
  void apply_environment();

  bool operator==(const RunConfig&) const = default;
};

// 17 significant digits, used for CSV.
std::string format_double(double v);
// Shortest text that reads back to the same double, used for config values.
std::string format_short(double v);
std::vector<double> parse_list(const std::string& text);
std::string join_list(const std::vector<double>& values);

}  // namespace lwaudit::report

#include "lwaudit/report/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <map>

#include <fmt/format.h>

#include "lwaudit/argument_tracker.hpp"
#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"
#include "lwaudit/littlewood_auditor.hpp"
#include "lwaudit/parallel.hpp"
#include "lwaudit/special_functions.hpp"
#include "lwaudit/zero_census.hpp"

#ifndef LWAUDIT_VERSION
#define LWAUDIT_VERSION "0.0.0"
#endif

namespace lwaudit::report {
namespace {

std::string iso_utc(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", tm.tm_year + 1900, tm.tm_mon + 1,
                     tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
}

ReportEnvelope make_envelope(const RunConfig& cfg, const std::string& command, Payload payload,
                             std::vector<std::string> flags) {
  ReportEnvelope env;
  env.tool_version = tool_version();
  env.command = command;
  env.timestamp = resolve_timestamp(cfg);
  env.config = cfg.echo();
  env.payload = std::move(payload);
  env.flags = std::move(flags);
  return env;
}

std::vector<double> grid(const RunConfig& cfg) {
  const auto n = static_cast<std::size_t>(std::floor((cfg.t_to - cfg.t_from) / cfg.t_step + 1e-9));
  std::vector<double> ts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ts[i] = cfg.t_from + static_cast<double>(i) * cfg.t_step;
  return ts;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n') c = ' ';
  }
  return s;
}

}  // namespace

std::string tool_version() { return LWAUDIT_VERSION; }

std::string resolve_timestamp(const RunConfig& cfg) {
  if (!cfg.timestamp.empty()) return cfg.timestamp;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') return iso_utc(static_cast<std::time_t>(v));
  }
  return iso_utc(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  if (dynamic_cast<const PreconditionError*>(&e)) return kPrecondition;
  if (dynamic_cast<const AccuracyError*>(&e)) return kAccuracy;
  if (dynamic_cast<const InconsistencyError*>(&e)) return kInconsistency;
  return kAccuracy;
}

CommandResult cmd_zeros(const RunConfig& cfg) {
  cfg.validate();
  const auto line = count_on_line(cfg.t_max, cfg.census_options(cfg.t_max));
  CommandResult r;
  r.output = zeros_csv(line.zeros);
  if (!line.complete || !line.flags.empty()) {
    r.exit_code = kInconsistency;
    std::string joined;
    for (const auto& f : line.flags) joined += (joined.empty() ? "" : "; ") + f;
    r.summary = fmt::format("zeros: census inconsistent up to {} ({} found, {} expected): {}",
                            format_double(cfg.t_max), line.n0, line.expected, joined);
  } else {
    r.summary = fmt::format("zeros: {} ordinates up to {}", line.n0, format_double(cfg.t_max));
  }
  return r;
}

CommandResult cmd_census(const RunConfig& cfg) {
  cfg.validate();
  const auto report = ratio_report(cfg.T, cfg.census_options(cfg.T));
  CommandResult r;
  r.output = dump(make_envelope(cfg, "census", report, report.flags));
  r.exit_code = report.flags.empty() ? kSuccess : kInconsistency;
  r.summary = fmt::format("census T={}: n0={} n_strip={} ratio={} product={}{}",
                          format_double(cfg.T), report.n0, report.n_argument_principle,
                          format_double(report.ratio), format_double(report.theorem_bound_product),
                          report.flags.empty() ? "" : " (flagged)");
  return r;
}

CommandResult cmd_audit(const RunConfig& cfg) {
  cfg.validate();
  const AuditRectangle rect{cfg.alpha, cfg.T};
  const auto report = audit(rect, cfg.audit_options(cfg.T));
  CommandResult r;
  r.output = dump(make_envelope(cfg, "audit", report, report.flags));
  if (!report.identity_pass || !report.vertical_pass || !report.asymptotic_pass) {
    r.exit_code = kAccuracy;
  } else if (!report.theorem_pass) {
    r.exit_code = kInconsistency;
  }
  r.summary = fmt::format(
      "{} audit alpha={} T={}: residual_identity={} residual_asymptotic={} residual_theorem={}",
      report.passed() ? "PASS" : "FAIL", format_double(rect.alpha), format_double(rect.T),
      format_double(report.residual_identity), format_double(report.residual_asymptotic),
      report.residual_theorem);
  return r;
}

SweepTable run_sweep(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.alphas.empty() || cfg.Ts.empty()) {
    throw UsageError("sweep: alphas and Ts must both be non-empty");
  }
  struct CensusCell {
    CensusInput input;
    std::string error;
  };
  std::map<double, CensusCell> census;
  for (double T : cfg.Ts) {
    CensusCell cell;
    try {
      cell.input = make_census_input(T, cfg.audit_options(T));
    } catch (const std::exception& e) {
      cell.error = one_line(e.what());
    }
    census.emplace(T, std::move(cell));
  }

  SweepTable table;
  for (double a : cfg.alphas) {
    for (double T : cfg.Ts) {
      SweepRow row;
      row.alpha = a;
      row.T = T;
      const auto& cell = census.at(T);
      if (!cell.error.empty()) {
        row.error = cell.error;
        table.rows.push_back(row);
        continue;
      }
      try {
        const auto rep = audit({a, T}, cfg.audit_options(T), &cell.input);
        row.n0 = rep.n0;
        row.n_strip = cell.input.n_strip;
        row.lhs = rep.lhs_sum_distances;
        row.rhs_vertical = rep.rhs_vertical;
        row.rhs_horizontal = rep.rhs_horizontal;
        row.rhs_total = rep.rhs_total;
        row.arg_xi_integral = rep.arg_xi_integral;
        row.asymptotic_rhs = rep.asymptotic_rhs;
        row.n_mangoldt = rep.n_mangoldt_with_s;
        row.residual_identity = rep.residual_identity;
        row.residual_asymptotic = rep.residual_asymptotic;
        row.residual_theorem = rep.residual_theorem;
        row.pass = rep.passed();
      } catch (const std::exception& e) {
        row.error = one_line(e.what());
      }
      table.rows.push_back(row);
    }
  }
  return table;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const auto table = run_sweep(cfg);
  CommandResult r;
  r.output = sweep_csv(table);
  int ok = 0;
  int first_failure = kSuccess;
  for (const auto& row : table.rows) {
    if (row.ok()) {
      ++ok;
    } else if (first_failure == kSuccess) {
      first_failure = kAccuracy;
    }
  }
  r.exit_code = ok > 0 ? kSuccess : first_failure;
  r.summary = fmt::format("sweep: {} of {} cells succeeded", ok, table.rows.size());
  return r;
}

CommandResult cmd_figure_data(const RunConfig& cfg) {
  cfg.validate();
  CommandResult r;
  if (cfg.kind == "z-trace") {
    const auto ts = grid(cfg);
    const auto eval = cfg.eval_for(std::max(std::abs(cfg.t_from), std::abs(cfg.t_to)));
    const auto z = parallel_map<double>(ts.size(), cfg.threads,
                                        [&](std::size_t i) { return hardy_z(ts[i], eval); });
    r.output = "t,Z\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      r.output += format_double(ts[i]) + "," + format_double(z[i]) + "\n";
    }
    r.summary = fmt::format("figure-data z-trace: {} rows", ts.size());
  } else if (cfg.kind == "s-staircase") {
    if (!(cfg.t_from > 0.0)) throw ConfigError("s-staircase: t_from must be positive");
    const auto ts = grid(cfg);
    const auto eval = cfg.eval_for(cfg.t_to);
    ArgOptions opts;
    opts.ordinate_guard = cfg.ordinate_guard;
    struct Cell {
      double s = 0.0;
      bool ok = false;
    };
    const auto cells = parallel_map<Cell>(ts.size(), cfg.threads, [&](std::size_t i) {
      try {
        return Cell{arg_zeta_critical(ts[i], eval, opts) / constants::pi, true};
      } catch (const OrdinateCollisionError&) {
        return Cell{};
      }
    });
    r.output = "t,S,N\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      r.output += format_double(ts[i]) + ",";
      if (cells[i].ok) {
        const double n = mangoldt_main_term(ts[i]) + cells[i].s;
        r.output += format_double(cells[i].s) + "," + format_double(n);
      } else {
        r.output += ",";
      }
      r.output += "\n";
    }
    r.summary = fmt::format("figure-data s-staircase: {} rows", ts.size());
  } else if (cfg.kind == "residuals") {
    if (cfg.alphas.empty() || cfg.Ts.empty()) {
      throw UsageError("figure-data residuals: alphas and Ts must both be non-empty");
    }
    const auto table = run_sweep(cfg);
    r.output = "alpha,T,residual_identity,residual_asymptotic,residual_theorem\n";
    std::size_t rows = 0;
    for (const auto& row : table.rows) {
      if (!row.ok()) continue;
      r.output += fmt::format("{},{},{},{},{}\n", format_double(row.alpha), format_double(row.T),
                              format_double(row.residual_identity),
                              format_double(row.residual_asymptotic), row.residual_theorem);
      ++rows;
    }
    r.summary = fmt::format("figure-data residuals: {} rows", rows);
  } else {
    throw UsageError("figure-data: unknown kind '" + cfg.kind +
                     "' (expected z-trace, s-staircase or residuals)");
  }
  return r;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  try {
    if (name == "zeros") return cmd_zeros(cfg);
    if (name == "census") return cmd_census(cfg);
    if (name == "audit") return cmd_audit(cfg);
    if (name == "sweep") return cmd_sweep(cfg);
    if (name == "figure-data") return cmd_figure_data(cfg);
    throw UsageError("unknown command '" + name + "'");
  } catch (const OrdinateCollisionError& e) {
    return {kPrecondition, {},
            fmt::format("error: {} (gamma = {})", one_line(e.what()), format_double(e.gamma()))};
  } catch (const std::exception& e) {
    return {exit_code_for(e), {}, "error: " + one_line(e.what())};
  }
}

}  // namespace lwaudit::report

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "lwaudit/argument_tracker.hpp"
#include "lwaudit/constants.hpp"
#include "lwaudit/littlewood_auditor.hpp"
#include "lwaudit/report/commands.hpp"
#include "lwaudit/special_functions.hpp"
#include "lwaudit/zero_census.hpp"
#include "oracles.hpp"

using namespace lwaudit;
using lwaudit::constants::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AuditOptions audit_opts(double T) {
  AuditOptions o;
  o.eval = EvalConfig::for_height(T);
  return o;
}

CensusOptions census_opts(double T) {
  CensusOptions o;
  o.eval = EvalConfig::for_height(T);
  return o;
}

Outcome functional_identity() {
  Outcome out;
  const auto t0 = Clock::now();
  const EvalConfig cfg;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> sig(0.0, 1.0), tee(-200.0, 200.0);
  double worst_fe = 0.0;
  double worst_conj = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Complex s(sig(rng), tee(rng));
    const Complex a = xi(s, cfg);
    const Complex b = xi(1.0 - s, cfg);
    const Complex c = xi(std::conj(s), cfg);
    worst_fe = std::max(worst_fe, std::abs(a - b) / (1e-9 * std::max(1.0, std::abs(a))));
    worst_conj = std::max(worst_conj, std::abs(c - std::conj(a)) / std::abs(a));
  }
  const double secs = seconds_since(t0);
  out.require(worst_fe <= 1.0, fmt::format("functional equation ratio {:.3g}", worst_fe));
  out.require(worst_conj <= 1e-12, fmt::format("conjugate symmetry {:.3g}", worst_conj));
  out.require(secs < 10.0, fmt::format("runtime {:.2f}s", secs));
  out.detail += fmt::format("{}max |xi(s)-xi(1-s)|/(1e-9 max(1,|xi|)) = {:.3g}, conj rel = {:.3g}, {:.2f}s",
                            out.detail.empty() ? "" : " | ", worst_fe, worst_conj, secs);
  return out;
}

Outcome zero_census() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto o = census_opts(100.0);
  const auto line = count_on_line(100.0, o);
  const int strip = count_in_strip(100.0, o);
  const long mangoldt = std::lround(n_mangoldt(100.0, o.eval).with_s);
  out.require(line.n0 == 29 && strip == 29 && mangoldt == 29,
              fmt::format("counts {}/{}/{}", line.n0, strip, mangoldt));
  double worst = 0.0;
  for (int i = 0; i < 5 && i < static_cast<int>(line.zeros.size()); ++i) {
    const auto& z = line.zeros[i];
    const double ref = static_cast<double>(
        oracle::bisect_zero(z.bracket_lo - 1e-4, z.bracket_hi + 1e-4, 1e-13L));
    worst = std::max(worst, std::abs(z.ordinate - ref));
  }
  out.require(line.zeros.size() >= 5 && worst < 1e-8, fmt::format("ordinate error {:.3g}", worst));
  const double secs = seconds_since(t0);
  out.require(secs < 30.0, fmt::format("runtime {:.2f}s", secs));
  out.detail += fmt::format("{}N0 = strip = round(N) = {}, first five ordinates within {:.2g}, {:.2f}s",
                            out.detail.empty() ? "" : " | ", line.n0, worst, secs);
  return out;
}

Outcome littlewood_identity() {
  Outcome out;
  const auto t0 = Clock::now();
  double worst_id = 0.0;
  double worst_v = 0.0;
  for (double T : {50.0, 100.0}) {
    const auto o = audit_opts(T);
    const auto census = make_census_input(T, o);
    for (double a : {0.25, 0.45, 0.49}) {
      const auto r = audit({a, T}, o, &census);
      worst_id = std::max(worst_id, std::abs(r.lhs_sum_distances - r.rhs_total));
      worst_v = std::max(worst_v, std::abs(r.rhs_vertical));
    }
  }
  const double secs = seconds_since(t0);
  out.require(worst_id < 1e-6, fmt::format("identity residual {:.3g}", worst_id));
  out.require(worst_v < 1e-7, fmt::format("vertical {:.3g}", worst_v));
  out.require(secs < 300.0, fmt::format("runtime {:.2f}s", secs));
  out.detail += fmt::format("{}max |lhs-rhs| = {:.3g}, max |vertical| = {:.3g}, {:.2f}s",
                            out.detail.empty() ? "" : " | ", worst_id, worst_v, secs);
  return out;
}

Outcome asymptotic_audit() {
  Outcome out;
  const double alpha = 0.49;
  std::vector<double> residuals;
  for (double T : {100.0, 500.0, 1000.0}) {
    const auto o = audit_opts(T);
    const auto census = make_census_input(T, o);
    const auto r = audit({alpha, T}, o, &census);
    const double dev = std::abs(r.arg_xi_integral / (1 - 2 * alpha) - census.n_strip);
    out.require(dev < 0.5, fmt::format("T={} deviation {:.3g}", T, dev));
    residuals.push_back(r.residual_asymptotic);
  }
  out.require(residuals[2] < residuals[0], "residual at T=1000 not below T=100");
  out.detail += fmt::format("{}residual_asymptotic at T=100,500,1000: {:.3g}, {:.3g}, {:.3g}",
                            out.detail.empty() ? "" : " | ", residuals[0], residuals[1], residuals[2]);
  return out;
}

Outcome term_checks() {
  Outcome out;
  double worst_c2 = 0.0;
  for (double a : {0.1, 0.25, 0.45, 0.49}) {
    const auto b = term_breakdown({a, 100.0}, audit_opts(100.0));
    worst_c2 = std::max(worst_c2, std::abs(b.c_sigma_polynomial.exact - (1 - 2 * a) * 7 * pi / 8));
    for (const auto& s : b.samples) {
      out.require(s.arg_pi_power.abs_error == 0.0 && s.arg_pi_power.exact == -(100.0 / 2) * std::log(pi),
                  "arg pi^{-s/2} not exact");
    }
  }
  out.require(worst_c2 <= 1e-12, fmt::format("C2 error {:.3g}", worst_c2));

  double worst_atan = 0.0;
  for (double T : {10.0, 20.0, 50.0, 100.0, 1000.0}) {
    for (double a : {0.1, 0.25, 0.45, 0.49}) {
      const auto b = term_breakdown({a, T}, audit_opts(T));
      worst_atan = std::max(worst_atan, b.arctan_difference.abs_error * T);
    }
  }
  out.require(worst_atan < 1.0, fmt::format("arctan error * T = {:.3g}", worst_atan));

  std::vector<double> err;
  for (double T : {250.0, 500.0, 1000.0, 2000.0}) {
    err.push_back(term_breakdown({0.45, T}, audit_opts(T)).samples[1].arg_gamma.abs_error);
  }
  std::string ratios;
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double r = err[i] / err[i - 1];
    out.require(r >= 0.375 && r <= 0.625, fmt::format("Stirling ratio {:.3g}", r));
    ratios += fmt::format("{}{:.4f}", i > 1 ? "," : "", r);
  }
  out.detail += fmt::format("{}C2 err {:.2g}, max T*arctan err {:.3g}, Stirling ratios {}",
                            out.detail.empty() ? "" : " | ", worst_c2, worst_atan, ratios);
  return out;
}

Outcome theorem_ratio() {
  Outcome out;
  std::string seen;
  for (double T : {50.0, 100.0, 250.0, 500.0, 1000.0, 1500.0, 2000.0}) {
    const auto r = ratio_report(T, census_opts(T));
    out.require(r.ratio == 1.0 && r.theorem_bound_product == 0.0 && r.flags.empty(),
                fmt::format("T={} ratio {} product {}", T, r.ratio, r.theorem_bound_product));
    seen += fmt::format("{}{}:{}", seen.empty() ? "" : " ", T, r.n0);
  }
  out.detail += fmt::format("{}ratio 1 and product 0 at T:N0 = {}", out.detail.empty() ? "" : " | ", seen);
  return out;
}

Outcome mvt_limit() {
  Outcome out;
  const std::vector<double> alphas = {0.40, 0.45, 0.49, 0.499};
  const auto t = mvt_limit_check(100.0, alphas, audit_opts(100.0));
  std::string devs;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out.require(t.rows[i].deviation < t.rows[i - 1].deviation, "deviation not decreasing");
    devs += fmt::format("{}{:.3g}", i ? ", " : "", t.rows[i].deviation);
  }
  out.detail += fmt::format("{}deviations {}", out.detail.empty() ? "" : " | ", devs);
  return out;
}

Outcome performance() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto line = count_on_line(1000.0, census_opts(1000.0));
  const int strip = count_in_strip(1000.0, census_opts(1000.0));
  const double secs = seconds_since(t0);
  out.require(line.n0 == 649 && strip == 649, fmt::format("counts {}/{}", line.n0, strip));
  out.require(secs < 60.0, fmt::format("census runtime {:.2f}s", secs));

  report::RunConfig cfg;
  cfg.timestamp = "2000-01-01T00:00:00Z";
  cfg.t_max = 1000.0;
  cfg.T = 500.0;
  cfg.alpha = 0.45;
  cfg.alphas = {0.45, 0.49};
  cfg.Ts = {100.0, 250.0};
  std::vector<std::string> outputs;
  for (unsigned threads : {1u, 4u, 8u}) {
    cfg.threads = threads;
    std::string all;
    for (const char* cmd : {"zeros", "census", "audit", "sweep"}) all += report::run_command(cmd, cfg).output;
    outputs.push_back(all);
  }
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  out.require(same, "outputs differ across thread counts");
  out.detail += fmt::format("{}census to 1000 ({} zeros) in {:.2f}s; zeros/census/audit/sweep output "
                            "{} bytes identical for 1, 4, 8 threads",
                            out.detail.empty() ? "" : " | ", line.n0, secs, outputs[0].size());
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 functional identity", functional_identity},
      {"2 zero census", zero_census},
      {"3 littlewood identity", littlewood_identity},
      {"4 asymptotic audit", asymptotic_audit},
      {"5 term checks", term_checks},
      {"6 theorem ratio", theorem_ratio},
      {"7 mvt limit", mvt_limit},
      {"8 performance and determinism", performance},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

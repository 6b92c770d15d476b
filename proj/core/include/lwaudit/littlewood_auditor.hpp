#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lwaudit/argument_tracker.hpp"
#include "lwaudit/config.hpp"
#include "lwaudit/zero_census.hpp"

namespace lwaudit {

/// The rectangle with vertices (1-alpha) +- iT and alpha +- iT.
struct AuditRectangle {
  double alpha = 0.45;
  double T = 100.0;

  /// Throws DomainError unless 0 < alpha < 1/2 and T > 0.
  void validate() const;
  bool operator==(const AuditRectangle&) const = default;
};

struct AuditOptions {
  EvalConfig eval;
  double quadrature_tol = 1e-8;
  double identity_tol = 1e-6;
  double vertical_tol = 1e-7;
  double asymptotic_tol = 0.5;
  double ordinate_guard = 1e-6;
  double track_step = 0.05;
  double xi_vertical_step = 0.1;
  /// Split-point perturbations tried when a quadrature node hits a zero.
  int max_node_retries = 3;
  unsigned threads = 0;

  void validate() const;
  ArgOptions arg_options() const;
  CensusOptions census_options() const;
};

/// Census data the auditor needs: critical-line zeros up to T and the
/// argument-principle count in the strip.
struct CensusInput {
  std::vector<ZeroRecord> zeros;
  bool complete = true;
  int n_strip = -1;
};

/// Sum of distances from the left edge over the zeros inside the rectangle:
/// each zero 1/2 + i gamma with 0 < gamma < T and its conjugate contribute
/// 1/2 - alpha. Throws InconsistencyError for an incomplete census.
double lhs_sum_distances(const AuditRectangle& rect, const CensusInput& census);

struct VerticalIntegral {
  double value = 0.0;  // (1/2pi) int_{-T}^{T} log|xi(a+it)| - log|xi(1-a+it)| dt
  double error = 0.0;
  double max_asymmetry = 0.0;  // largest |integrand| seen at a node
  int retries = 0;
};

VerticalIntegral rhs_vertical_integral(const AuditRectangle& rect, const AuditOptions& opts);

struct HorizontalIntegral {
  double full = 0.0;     // (1/2pi) int (arg xi(s+iT) - arg xi(s-iT)) ds
  double reduced = 0.0;  // (1/pi) int arg xi(s+iT) ds
  double error = 0.0;
};

/// Both forms of the horizontal contribution, with arguments continued from
/// s = 2. Throws AccuracyError when the two forms differ by more than
/// 10 * quadrature_tol.
HorizontalIntegral rhs_horizontal_integral(const AuditRectangle& rect, const AuditOptions& opts);

/// sigma log(sigma^2/4 + T^2/4) - 2 sigma + 2T arctan(sigma/T), an
/// antiderivative of log(sigma^2/4 + T^2/4) in sigma.
double closed_form_antiderivative(double sigma, double T);

/// (1 - 2 alpha) (T/2pi log(T/2pi) - T/2pi + 7/8 + arg zeta(1/2+iT)/pi).
double asymptotic_rhs(const AuditRectangle& rect, const AuditOptions& opts);

struct TermEstimate {
  double exact = 0.0;
  double predicted = 0.0;
  double abs_error = 0.0;
  bool operator==(const TermEstimate&) const = default;
};

struct SigmaTerms {
  double sigma = 0.0;
  TermEstimate arg_quadratic;  // arg(s(s-1)/2) vs pi
  TermEstimate arg_pi_power;   // arg pi^{-s/2} vs -(T/2) log pi
  TermEstimate arg_gamma;      // Im log Gamma(s/2) vs its Stirling form
  double arg_zeta = 0.0;
  bool operator==(const SigmaTerms&) const = default;
};

/// Every factor of arg xi on the top edge against its large-T estimate.
/// Integrals run over [alpha, 1 - alpha].
struct TermBreakdown {
  std::vector<SigmaTerms> samples;  // sigma = alpha, 1/2, 1 - alpha
  TermEstimate arg_quadratic;       // vs (1 - 2a) pi
  TermEstimate arg_pi_power;        // vs -(1 - 2a)(T/2) log pi
  TermEstimate arg_gamma;           // vs the Stirling form integrated in closed form
  double arg_zeta_integral = 0.0;
  TermEstimate c_sigma_integral;    // int of the exact C(sigma) vs (1 - 2a) 7pi/8
  TermEstimate c_sigma_polynomial;  // int (3pi/4 + pi sigma/4) by quadrature vs (1 - 2a) 7pi/8
  TermEstimate log_skip;            // T log(a^2/4 + T^2/4) vs 2T log(T/2)
  TermEstimate arctan_difference;   // T(atan((1-a)/T) - atan(a/T)) vs 1 - 2a
  /// (1/pi) int arg xi by components vs
  /// (1 - 2a)(T/2pi log(T/2pi) - T/2pi + 7/8) + (1/pi) int arg zeta.
  TermEstimate assembled_rhs;
  bool operator==(const TermBreakdown&) const = default;
};

TermBreakdown term_breakdown(const AuditRectangle& rect, const AuditOptions& opts);

struct MvtRow {
  double alpha = 0.0;
  double mean = 0.0;       // (1/(1-2a)) int_a^{1-a} f(sigma) d sigma
  double deviation = 0.0;  // |mean - f(1/2)|
  bool operator==(const MvtRow&) const = default;
};

struct MvtTable {
  double T = 0.0;
  double center = 0.0;  // arg zeta(1/2 + iT)
  std::vector<MvtRow> rows;  // ascending alpha
  bool monotone = false;     // deviations decrease as alpha -> 1/2
  bool operator==(const MvtTable&) const = default;
};

/// Mean of integrand over [alpha, 1 - alpha].
double mvt_mean(const std::function<double(double)>& integrand, double alpha, double abs_tol);

/// Means of arg zeta(sigma + iT) over shrinking intervals around 1/2.
MvtTable mvt_limit_check(double T, std::span<const double> alphas, const AuditOptions& opts);

struct LittlewoodReport {
  AuditRectangle rectangle;
  int n0 = 0;
  int n_of_T = 0;
  double lhs_sum_distances = 0.0;
  double rhs_vertical = 0.0;
  double rhs_horizontal = 0.0;
  double rhs_horizontal_reduced = 0.0;
  double rhs_total = 0.0;
  double arg_xi_integral = 0.0;  // (1/pi) int_a^{1-a} arg xi(sigma + iT) d sigma
  double asymptotic_rhs = 0.0;
  double n_mangoldt_with_s = 0.0;
  double s_of_T = 0.0;
  double residual_identity = 0.0;    // |lhs - rhs_total|
  double residual_asymptotic = 0.0;  // |arg_xi_integral / (1-2a) - n_mangoldt_with_s|
  int residual_theorem = 0;          // |N0(T) - N(T)|
  double vertical_asymmetry = 0.0;
  double quadrature_error = 0.0;
  bool identity_pass = false;
  bool vertical_pass = false;
  bool asymptotic_pass = false;
  bool theorem_pass = false;
  TermBreakdown breakdown;
  std::vector<std::string> flags;

  bool passed() const { return identity_pass && vertical_pass && asymptotic_pass && theorem_pass; }
  bool operator==(const LittlewoodReport&) const = default;
};

/// Full audit of one rectangle. When `census` is null the census up to T is
/// computed here.
LittlewoodReport audit(const AuditRectangle& rect, const AuditOptions& opts,
                       const CensusInput* census = nullptr);

/// Census data for audits at height T.
CensusInput make_census_input(double T, const AuditOptions& opts);

}  // namespace lwaudit

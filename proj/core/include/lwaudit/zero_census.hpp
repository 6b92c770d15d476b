#pragma once

#include <string>
#include <vector>

#include "lwaudit/config.hpp"

namespace lwaudit {

/// One critical-line zero 1/2 + i*ordinate located by bisection on Z.
struct ZeroRecord {
  double ordinate = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // |Z(ordinate)|
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct CensusOptions {
  EvalConfig eval;
  double zero_tol = 1e-9;
  double residual_tol = 1e-5;
  double ordinate_guard = 1e-6;
  /// 0 selects default_scan_step(T).
  double scan_step = 0.0;
  /// Re-scans at step/4 allowed when the sign-change count falls short.
  int max_rescans = 3;
  /// Tracking step for the argument-principle contour.
  double track_step = 0.1;
  unsigned threads = 0;

  void validate() const;
};

/// min(0.25, (2 pi / log(t_hi / 2 pi)) / 4): a quarter of the mean zero gap.
double default_scan_step(double t_hi);

/// Grid cells [t, t + step] of [t_lo, t_hi] across which Z changes sign.
/// The last cell is clipped to t_hi. Grid values are computed on `threads`
/// workers; the result does not depend on the thread count.
std::vector<Bracket> scan_sign_changes(double t_lo, double t_hi, double step,
                                       const EvalConfig& cfg, unsigned threads = 1);

/// Bisects a sign-change bracket down to width <= zero_tol. Throws
/// InvalidBracketError when Z has the same sign at both ends and
/// AccuracyError when the residual exceeds residual_tol.
ZeroRecord refine_zero(Bracket bracket, double zero_tol, const EvalConfig& cfg,
                       double residual_tol = 1e-5);

struct LineCount {
  int n0 = 0;
  std::vector<ZeroRecord> zeros;  // ascending, de-duplicated
  int expected = 0;               // round(von Mangoldt with S(T))
  int rescans = 0;
  double step_used = 0.0;
  bool complete = false;
  std::vector<std::string> flags;
};

/// Critical-line zeros with 0 < gamma < T. Re-scans with a finer grid while
/// the count falls short of the von Mangoldt estimate; any remaining
/// shortfall is flagged and `complete` is false.
LineCount count_on_line(double T, const CensusOptions& opts);

/// Zeros of xi in the strip up to height T (with multiplicity): the winding
/// of xi around the rectangle [-0.1, 1.1] x [0, T]. Throws AccuracyError when
/// the winding is not within 0.01 of an integer.
int count_in_strip(double T, const CensusOptions& opts);

struct MangoldtCount {
  double main_term = 0.0;  // (T/2pi) log(T/2pi) - T/2pi + 7/8
  double with_s = 0.0;     // main_term + arg zeta(1/2 + iT) / pi
  double s_of_T = 0.0;
};

double mangoldt_main_term(double T);
MangoldtCount n_mangoldt(double T, const EvalConfig& cfg, double ordinate_guard = 1e-6);

struct CensusReport {
  double T = 0.0;
  int n0 = 0;
  int n_argument_principle = 0;
  double n_mangoldt_main = 0.0;
  double n_mangoldt_real = 0.0;
  double s_of_T = 0.0;
  double ratio = 0.0;
  double theorem_bound_product = 0.0;  // |ratio - 1| T log T
  std::vector<std::string> flags;

  bool operator==(const CensusReport&) const = default;
};

/// The three counts at height T and the ratio N0(T)/N(T). Requires T > 20.
CensusReport ratio_report(double T, const CensusOptions& opts);

/// As ratio_report, reusing a line census already computed for this T.
CensusReport ratio_report(double T, const CensusOptions& opts, const LineCount& line);

}  // namespace lwaudit

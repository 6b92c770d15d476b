#pragma once

#include "lwaudit/config.hpp"

namespace lwaudit {

/// Throws RangeError unless both parts of z are finite.
Complex require_finite(Complex z, const char* what);

/// Partial Dirichlet sum of n^{-s}, n = 1..cfg.dirichlet_terms. Requires
/// Re(s) > 1. Truncation error is bounded by dirichlet_truncation_bound().
Complex zeta_dirichlet(Complex s, const EvalConfig& cfg);

/// N^{1-sigma} / (sigma - 1): tail bound for the partial Dirichlet sum.
double dirichlet_truncation_bound(double sigma, long terms);

/// Riemann zeta by Euler-Maclaurin summation, valid for Re(s) > -1, s != 1.
Complex zeta_euler_maclaurin(Complex s, const EvalConfig& cfg);

/// (s - 1) * zeta(s), which is entire; equals 1 at s = 1.
Complex zeta_times_s_minus_one(Complex s, const EvalConfig& cfg);

/// Principal branch of log Gamma(z). The imaginary part is continuous off the
/// nonpositive real axis (it is not reduced modulo 2*pi).
Complex log_gamma(Complex z);

/// Gamma(z) from the truncated Weierstrass product with
/// cfg.weierstrass_terms factors. Converges like O(|z|^2 / K); this is an
/// independent oracle, not a production evaluator.
Complex gamma_weierstrass(Complex z, const EvalConfig& cfg);

/// A logarithm of xi(s) = 1/2 s (s-1) pi^{-s/2} Gamma(s/2) zeta(s).
/// The real part is log|xi(s)|; the imaginary part is an argument of xi(s)
/// on some branch (it is not a continuous argument). Avoids the underflow
/// of |xi| ~ exp(-pi |t| / 4) at large heights. Throws OnPathZeroError at an
/// exact zero.
Complex log_xi(Complex s, const EvalConfig& cfg);

/// xi(s). Entire; xi(0) = xi(1) = 1/2. Throws RangeError when |xi(s)| is
/// outside the normal range of double (use log_xi instead).
Complex xi(Complex s, const EvalConfig& cfg);

/// theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log(pi). Odd in t.
double riemann_siegel_theta(double t);

struct HardyZValue {
  double value = 0.0;
  double discarded_imag = 0.0;
};

/// Z(t) = exp(i theta(t)) zeta(1/2 + i t) with the imaginary residue that was
/// dropped. Throws AccuracyError when that residue reaches 10 * abs_tol.
HardyZValue hardy_z_detail(double t, const EvalConfig& cfg);

inline double hardy_z(double t, const EvalConfig& cfg) {
  return hardy_z_detail(t, cfg).value;
}

}  // namespace lwaudit

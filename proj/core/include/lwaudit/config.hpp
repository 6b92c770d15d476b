#pragma once

#include <complex>

namespace lwaudit {

using Complex = std::complex<double>;

/// Truncation and accuracy knobs shared by every evaluator.
///
/// With `auto_cutoff` set (the default) the Euler-Maclaurin cutoff used for a
/// given point is max(em_cutoff, ceil(|t|/2) + 10), so a single config serves
/// every height. With `auto_cutoff` cleared, em_cutoff is used verbatim and a
/// point whose height needs more terms raises ConfigError.
struct EvalConfig {
  long dirichlet_terms = 1'000'000;
  long em_cutoff = 20;
  bool auto_cutoff = true;
  int em_bernoulli_terms = 30;
  double abs_tol = 1e-10;
  long weierstrass_terms = 1'000'000;

  /// Throws ConfigError when a field is out of range.
  void validate() const;

  /// Cutoff actually used at height t; throws ConfigError when em_cutoff is
  /// pinned and too small for t.
  long cutoff_for(double t) const;

  /// Default abs_tol: 1e-10 up to T = 1000, relaxed to 1e-8 up to 5000.
  static EvalConfig for_height(double t_max);
};

}  // namespace lwaudit

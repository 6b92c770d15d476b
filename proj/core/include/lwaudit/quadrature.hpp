#pragma once

#include <functional>
#include <span>

namespace lwaudit {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // Kronrod-Gauss difference summed over accepted pieces
  long evaluations = 0;
  long intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Bisects the piece with the largest error estimate until the total
/// estimate is <= abs_tol. Throws AccuracyError after max_intervals pieces.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, long max_intervals = 4000);

/// Integrates over consecutive breakpoints [x0, x1], [x1, x2], ... with each
/// piece handled by integrate_adaptive at a share of abs_tol proportional to
/// its length. Pieces run on `threads` workers and are summed in index order.
QuadratureResult integrate_pieces(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints, double abs_tol,
                                  unsigned threads);

}  // namespace lwaudit

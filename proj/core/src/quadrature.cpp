#include "lwaudit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "lwaudit/errors.hpp"
#include "lwaudit/parallel.hpp"

namespace lwaudit {
namespace {

// Kronrod 15-point abscissae (positive half) and weights; Gauss 7-point
// weights sit on the odd Kronrod nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrod[j] * pair;
    if (j % 2 == 1) gauss += kGauss[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, long max_intervals) {
  if (!(abs_tol > 0.0)) throw DomainError("integrate_adaptive: abs_tol must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_adaptive: bad limits");
  QuadratureResult result;
  if (a == b) return result;

  std::priority_queue<Piece> queue;
  Piece first = kronrod15(f, a, b);
  result.evaluations = 15;
  double error = first.error;
  queue.push(first);

  while (error > abs_tol) {
    if (static_cast<long>(queue.size()) >= max_intervals) {
      throw AccuracyError("integrate_adaptive: error estimate " + std::to_string(error) +
                          " above tolerance after " + std::to_string(max_intervals) +
                          " intervals");
    }
    const Piece worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = kronrod15(f, worst.a, mid);
    const Piece right = kronrod15(f, mid, worst.b);
    result.evaluations += 30;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in interval order so the result does not depend on heap order.
  std::vector<Piece> pieces;
  pieces.reserve(queue.size());
  while (!queue.empty()) {
    pieces.push_back(queue.top());
    queue.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& l, const Piece& r) { return l.a < r.a; });
  result.value = 0.0;
  result.error = 0.0;
  for (const auto& p : pieces) {
    result.value += p.value;
    result.error += p.error;
  }
  result.intervals = static_cast<long>(pieces.size());
  return result;
}

QuadratureResult integrate_pieces(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints, double abs_tol,
                                  unsigned threads) {
  QuadratureResult total;
  if (breakpoints.size() < 2) return total;
  const double span = std::abs(breakpoints.back() - breakpoints.front());
  const std::size_t count = breakpoints.size() - 1;
  const auto parts = parallel_map<QuadratureResult>(count, threads, [&](std::size_t i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    const double share = span > 0.0 ? abs_tol * std::abs(b - a) / span : abs_tol;
    return integrate_adaptive(f, a, b, share);
  });
  for (const auto& p : parts) {
    total.value += p.value;
    total.error += p.error;
    total.evaluations += p.evaluations;
    total.intervals += p.intervals;
  }
  return total;
}

}  // namespace lwaudit

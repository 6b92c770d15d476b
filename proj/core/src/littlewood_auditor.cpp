#include "lwaudit/littlewood_auditor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"
#include "lwaudit/parallel.hpp"
#include "lwaudit/quadrature.hpp"
#include "lwaudit/special_functions.hpp"

namespace lwaudit {
namespace {

using constants::pi;

// |log|xi(a+it)| - log|xi(1-a+it)|| above this at a node means the evaluator,
// not the functional identity, is failing.
constexpr double kSymmetryLimit = 1e-6;
// Relative floor for the horizontal integrals, whose integrands reach
// ~T log T and leave only a few ulps of headroom.
constexpr double kRelativeFloor = 1e-14;

// Argument of a function along the horizontal line Im s = T, continued from a
// point where it is already known.
class LineArg {
 public:
  LineArg(LogFunction f, double T, double anchor_sigma, double anchor_arg, const ArgOptions& opts)
      : f_(std::move(f)), T_(T), anchor_(anchor_sigma), anchor_arg_(anchor_arg), opts_(opts) {}

  double operator()(double sigma) const {
    if (sigma == anchor_) return anchor_arg_;
    PathSpec path;
    path.vertices = {Complex(anchor_, T_), Complex(sigma, T_)};
    path.initial_arg = anchor_arg_;
    path.max_step = opts_.max_step;
    path.zero_guard = opts_.zero_guard;
    return continuous_log_arg(f_, path).final_arg();
  }

 private:
  LogFunction f_;
  double T_;
  double anchor_;
  double anchor_arg_;
  ArgOptions opts_;
};

LogFunction log_zeta_function(const EvalConfig& cfg) {
  return [cfg](Complex s) -> Complex {
    const Complex v = zeta_euler_maclaurin(s, cfg);
    if (v == Complex(0.0, 0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    return std::log(v);
  };
}

double integrate_rel(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  // One coarse pass fixes the relative floor, then the adaptive pass.
  const auto coarse = integrate_adaptive(f, a, b, std::numeric_limits<double>::max());
  const double tol = std::max(abs_tol, kRelativeFloor * std::abs(coarse.value));
  return integrate_adaptive(f, a, b, tol).value;
}

TermEstimate estimate(double exact, double predicted) {
  return {exact, predicted, std::abs(exact - predicted)};
}

void atomic_max(std::atomic<double>& target, double value) {
  double current = target.load();
  while (value > current && !target.compare_exchange_weak(current, value)) {
  }
}

}  // namespace

void AuditRectangle::validate() const {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw DomainError("AuditRectangle: alpha must lie in (0, 1/2), got " + std::to_string(alpha));
  }
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw DomainError("AuditRectangle: T must be positive, got " + std::to_string(T));
  }
}

void AuditOptions::validate() const {
  eval.validate();
  if (!(quadrature_tol > 0.0) || !(identity_tol > 0.0) || !(vertical_tol > 0.0) ||
      !(asymptotic_tol > 0.0)) {
    throw ConfigError("AuditOptions: tolerances must be positive");
  }
  if (!(ordinate_guard >= 0.0)) throw ConfigError("AuditOptions: ordinate_guard must be >= 0");
  if (!(track_step > 0.0) || !(xi_vertical_step > 0.0)) {
    throw ConfigError("AuditOptions: tracking steps must be positive");
  }
  if (max_node_retries < 0) throw ConfigError("AuditOptions: max_node_retries must be >= 0");
}

ArgOptions AuditOptions::arg_options() const {
  ArgOptions a;
  a.max_step = track_step;
  a.xi_vertical_step = xi_vertical_step;
  a.ordinate_guard = ordinate_guard;
  return a;
}

CensusOptions AuditOptions::census_options() const {
  CensusOptions c;
  c.eval = eval;
  c.ordinate_guard = ordinate_guard;
  c.threads = threads;
  return c;
}

double lhs_sum_distances(const AuditRectangle& rect, const CensusInput& census) {
  rect.validate();
  if (!census.complete) {
    throw InconsistencyError("lhs_sum_distances: census up to T is incomplete");
  }
  // All census zeros have beta = 1/2; each one and its conjugate sits
  // beta - alpha from the left edge.
  constexpr double beta = 0.5;
  double sum = 0.0;
  for (const auto& z : census.zeros) {
    if (z.ordinate > 0.0 && z.ordinate < rect.T) sum += 2.0 * (beta - rect.alpha);
  }
  return sum;
}

VerticalIntegral rhs_vertical_integral(const AuditRectangle& rect, const AuditOptions& opts) {
  rect.validate();
  opts.validate();
  const double left = rect.alpha;
  const double right = 1.0 - rect.alpha;
  std::atomic<double> asymmetry{0.0};
  std::atomic<int> retries{0};

  const std::function<double(double)> integrand = [&](double t) {
    const double diff = log_xi(Complex(left, t), opts.eval).real() -
                        log_xi(Complex(right, t), opts.eval).real();
    atomic_max(asymmetry, std::abs(diff));
    if (std::abs(diff) > kSymmetryLimit) {
      throw AccuracyError("rhs_vertical_integral: |xi(a+it)| and |xi(1-a+it)| differ by a log of " +
                          std::to_string(diff) + " at t = " + std::to_string(t));
    }
    return diff / constants::two_pi;
  };

  const auto pieces = static_cast<std::size_t>(std::max(2.0, std::ceil(2.0 * rect.T)));
  const double share = opts.quadrature_tol / static_cast<double>(pieces);
  const auto edge = [&](std::size_t k) {
    return -rect.T + 2.0 * rect.T * static_cast<double>(k) / static_cast<double>(pieces);
  };

  const auto parts = parallel_map<QuadratureResult>(pieces, opts.threads, [&](std::size_t k) {
    const double a = edge(k);
    const double b = edge(k + 1);
    for (int attempt = 0;; ++attempt) {
      try {
        if (attempt == 0) return integrate_adaptive(integrand, a, b, share);
        // A node landed on a zero of xi: move the interior split point.
        const double split = a + (b - a) * (0.5 + 0.137 * attempt);
        auto lo = integrate_adaptive(integrand, a, split, 0.5 * share);
        const auto hi = integrate_adaptive(integrand, split, b, 0.5 * share);
        lo.value += hi.value;
        lo.error += hi.error;
        return lo;
      } catch (const OnPathZeroError& e) {
        retries.fetch_add(1);
        if (attempt >= opts.max_node_retries) {
          throw AccuracyError(std::string("rhs_vertical_integral: node collision not resolved: ") +
                              e.what());
        }
      }
    }
  });

  VerticalIntegral out;
  for (const auto& p : parts) {
    out.value += p.value;
    out.error += p.error;
  }
  out.max_asymmetry = asymmetry.load();
  out.retries = retries.load();
  return out;
}

HorizontalIntegral rhs_horizontal_integral(const AuditRectangle& rect, const AuditOptions& opts) {
  rect.validate();
  opts.validate();
  const ArgOptions ao = opts.arg_options();
  const double a = rect.alpha;
  const double b = 1.0 - rect.alpha;
  const LogFunction f = normalized_xi(opts.eval);

  const double top_anchor = arg_xi_on_line(rect.T, {b}, opts.eval, ao).front();
  const double bottom_anchor = arg_xi_on_line(-rect.T, {b}, opts.eval, ao).front();
  const LineArg top(f, rect.T, b, top_anchor, ao);
  const LineArg bottom(f, -rect.T, b, bottom_anchor, ao);

  const double tol = 1e-2 * opts.quadrature_tol;
  const double top_integral = integrate_rel(top, a, b, tol);
  const double bottom_integral = integrate_rel(bottom, a, b, tol);

  HorizontalIntegral out;
  out.full = (top_integral - bottom_integral) / constants::two_pi;
  out.reduced = top_integral / pi;
  out.error = tol;
  if (std::abs(out.full - out.reduced) > 10.0 * opts.quadrature_tol) {
    throw AccuracyError("rhs_horizontal_integral: full form " + std::to_string(out.full) +
                        " and reduced form " + std::to_string(out.reduced) + " disagree");
  }
  return out;
}

double closed_form_antiderivative(double sigma, double T) {
  if (!(T > 0.0)) throw DomainError("closed_form_antiderivative requires T > 0");
  return sigma * std::log(sigma * sigma / 4.0 + T * T / 4.0) - 2.0 * sigma +
         2.0 * T * std::atan(sigma / T);
}

double asymptotic_rhs(const AuditRectangle& rect, const AuditOptions& opts) {
  rect.validate();
  const MangoldtCount m = n_mangoldt(rect.T, opts.eval, opts.ordinate_guard);
  return (1.0 - 2.0 * rect.alpha) * m.with_s;
}

TermBreakdown term_breakdown(const AuditRectangle& rect, const AuditOptions& opts) {
  rect.validate();
  opts.validate();
  const double T = rect.T;
  const double a = rect.alpha;
  const double b = 1.0 - a;
  const double width = b - a;
  const double tol = 1e-2 * opts.quadrature_tol;
  const ArgOptions ao = opts.arg_options();

  const auto gamma_arg = [&](double sigma) { return log_gamma(0.5 * Complex(sigma, T)).imag(); };
  const auto gamma_stirling = [&](double sigma) {
    return T / 4.0 * std::log(sigma * sigma / 4.0 + T * T / 4.0) - T / 2.0 +
           (sigma / 2.0 - 0.5) * (pi / 2.0);
  };
  const auto quadratic_arg = [&](double sigma) { return arg_quadratic_factor(sigma, T); };
  const auto pi_power_arg = [&](double sigma) {
    return (-0.5 * Complex(sigma, T) * constants::log_pi).imag();
  };

  TermBreakdown out;
  const std::vector<double> sigmas = {a, 0.5, b};
  const auto zeta_args = arg_zeta_on_line(T, sigmas, opts.eval, ao);
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const double s = sigmas[i];
    SigmaTerms row;
    row.sigma = s;
    row.arg_quadratic = estimate(quadratic_arg(s), pi);
    row.arg_pi_power = estimate(pi_power_arg(s), -0.5 * T * constants::log_pi);
    row.arg_gamma = estimate(gamma_arg(s), gamma_stirling(s));
    row.arg_zeta = zeta_args[i];
    out.samples.push_back(row);
  }

  out.arg_quadratic = estimate(integrate_rel(quadratic_arg, a, b, tol), width * pi);
  out.arg_pi_power =
      estimate(integrate_rel(pi_power_arg, a, b, tol), -width * 0.5 * T * constants::log_pi);
  const double stirling_integral =
      T / 4.0 * (closed_form_antiderivative(b, T) - closed_form_antiderivative(a, T)) -
      width * T / 2.0 - width * pi / 8.0;
  out.arg_gamma = estimate(integrate_rel(gamma_arg, a, b, tol), stirling_integral);

  const LineArg zeta_line(log_zeta_function(opts.eval), T, 0.5, zeta_args[1], ao);
  out.arg_zeta_integral = integrate_rel(zeta_line, a, b, tol);

  const double c2 = width * 7.0 * pi / 8.0;
  const auto c_exact = [&](double sigma) {
    return quadratic_arg(sigma) + (sigma / 2.0 - 0.5) * std::arg(Complex(sigma / 2.0, T / 2.0));
  };
  out.c_sigma_integral = estimate(integrate_rel(c_exact, a, b, tol), c2);
  const auto c_poly = [](double sigma) { return 3.0 * pi / 4.0 + pi * sigma / 4.0; };
  out.c_sigma_polynomial = estimate(integrate_adaptive(c_poly, a, b, tol).value, c2);

  out.log_skip = estimate(T * std::log(a * a / 4.0 + T * T / 4.0), 2.0 * T * std::log(T / 2.0));
  out.arctan_difference = estimate(T * (std::atan(b / T) - std::atan(a / T)), width);

  const double x = T / constants::two_pi;
  const double components =
      (out.arg_quadratic.exact + out.arg_pi_power.exact + out.arg_gamma.exact +
       out.arg_zeta_integral) / pi;
  out.assembled_rhs = estimate(components, width * (x * std::log(x) - x + 7.0 / 8.0) +
                                               out.arg_zeta_integral / pi);
  return out;
}

double mvt_mean(const std::function<double(double)>& integrand, double alpha, double abs_tol) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw DomainError("mvt_mean: alpha must lie in (0, 1/2)");
  const double width = 1.0 - 2.0 * alpha;
  return integrate_adaptive(integrand, alpha, 1.0 - alpha, abs_tol * width).value / width;
}

MvtTable mvt_limit_check(double T, std::span<const double> alphas, const AuditOptions& opts) {
  opts.validate();
  if (!(T > 0.0)) throw DomainError("mvt_limit_check requires T > 0");
  ensure_not_ordinate(T, opts.eval, opts.ordinate_guard);
  const ArgOptions ao = opts.arg_options();

  MvtTable table;
  table.T = T;
  table.center = arg_zeta_on_line(T, {0.5}, opts.eval, ao).front();
  const LineArg zeta_line(log_zeta_function(opts.eval), T, 0.5, table.center, ao);

  std::vector<double> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.begin(), sorted.end());
  for (double a : sorted) {
    MvtRow row;
    row.alpha = a;
    row.mean = mvt_mean(zeta_line, a, 1e-2 * opts.quadrature_tol);
    row.deviation = std::abs(row.mean - table.center);
    table.rows.push_back(row);
  }
  table.monotone = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (!(table.rows[i].deviation < table.rows[i - 1].deviation)) table.monotone = false;
  }
  return table;
}

CensusInput make_census_input(double T, const AuditOptions& opts) {
  const CensusOptions copts = opts.census_options();
  const LineCount line = count_on_line(T, copts);
  CensusInput in;
  in.zeros = line.zeros;
  in.complete = line.complete;
  in.n_strip = count_in_strip(T, copts);
  return in;
}

LittlewoodReport audit(const AuditRectangle& rect, const AuditOptions& opts,
                       const CensusInput* census) {
  rect.validate();
  opts.validate();
  ensure_not_ordinate(rect.T, opts.eval, opts.ordinate_guard);

  CensusInput local;
  if (census == nullptr) {
    local = make_census_input(rect.T, opts);
    census = &local;
  }

  LittlewoodReport r;
  r.rectangle = rect;
  r.n0 = static_cast<int>(std::count_if(census->zeros.begin(), census->zeros.end(),
                                        [&](const ZeroRecord& z) {
                                          return z.ordinate > 0.0 && z.ordinate < rect.T;
                                        }));
  r.n_of_T = census->n_strip;
  if (r.n_of_T != r.n0) {
    r.flags.push_back("strip count " + std::to_string(r.n_of_T) + " differs from line count " +
                      std::to_string(r.n0) +
                      ": an off-line zero may lie in the rectangle; LHS counts line zeros only");
  }

  r.lhs_sum_distances = lhs_sum_distances(rect, *census);
  const VerticalIntegral vertical = rhs_vertical_integral(rect, opts);
  const HorizontalIntegral horizontal = rhs_horizontal_integral(rect, opts);
  r.rhs_vertical = vertical.value;
  r.rhs_horizontal = horizontal.full;
  r.rhs_horizontal_reduced = horizontal.reduced;
  r.rhs_total = r.rhs_vertical + r.rhs_horizontal;
  r.arg_xi_integral = horizontal.reduced;
  r.vertical_asymmetry = vertical.max_asymmetry;
  r.quadrature_error = vertical.error + horizontal.error;
  if (vertical.retries > 0) {
    r.flags.push_back("vertical quadrature moved " + std::to_string(vertical.retries) +
                      " split point(s) off a zero");
  }

  const MangoldtCount m = n_mangoldt(rect.T, opts.eval, opts.ordinate_guard);
  const double width = 1.0 - 2.0 * rect.alpha;
  r.n_mangoldt_with_s = m.with_s;
  r.s_of_T = m.s_of_T;
  r.asymptotic_rhs = width * m.with_s;

  r.residual_identity = std::abs(r.lhs_sum_distances - r.rhs_total);
  r.residual_asymptotic = std::abs(r.arg_xi_integral / width - r.n_mangoldt_with_s);
  r.residual_theorem = std::abs(r.n0 - r.n_of_T);

  r.identity_pass = r.residual_identity < opts.identity_tol;
  r.vertical_pass = std::abs(r.rhs_vertical) < opts.vertical_tol;
  r.asymptotic_pass = r.residual_asymptotic < opts.asymptotic_tol;
  r.theorem_pass = r.residual_theorem == 0;

  r.breakdown = term_breakdown(rect, opts);
  return r;
}

}  // namespace lwaudit
